#include <superint/errors.hpp>
#include <superint/grassmann.hpp>

#include <ostream>

namespace superint
{

int merge_sign(OddMask a, OddMask b) noexcept
{
    if (a & b) {
        return 0;
    }
    // Each generator j of b has to move past every generator of a larger than j.
    unsigned swaps = 0;
    while (b) {
        const unsigned j = static_cast<unsigned>(__builtin_ctzll(b));
        b &= b - 1u;
        const OddMask above = j >= 63 ? OddMask{0} : (~OddMask{0} << (j + 1));
        swaps += degree(a & above);
    }
    return (swaps & 1u) ? -1 : 1;
}

std::vector<unsigned> mask_indices(OddMask m)
{
    std::vector<unsigned> out;
    while (m) {
        out.push_back(static_cast<unsigned>(__builtin_ctzll(m)));
        m &= m - 1u;
    }
    return out;
}

GrassmannElement::GrassmannElement(unsigned generator_count) : m_n(generator_count)
{
    if (m_n > max_odd_generators) {
        throw DimensionError("at most 64 odd generators are supported");
    }
}

GrassmannElement::GrassmannElement(unsigned generator_count, const Scalar &c) : GrassmannElement(generator_count)
{
    add_term(0, c);
}

GrassmannElement GrassmannElement::generator(unsigned generator_count, unsigned index)
{
    if (index >= generator_count) {
        throw DimensionError("generator index " + std::to_string(index) + " out of range");
    }
    return monomial(generator_count, OddMask{1} << index);
}

GrassmannElement GrassmannElement::monomial(unsigned generator_count, OddMask m, const Scalar &c)
{
    GrassmannElement g(generator_count);
    if (m & ~full_mask(generator_count)) {
        throw DimensionError("monomial uses generators beyond the algebra");
    }
    g.add_term(m, c);
    return g;
}

Scalar GrassmannElement::coefficient(OddMask m) const
{
    const auto it = m_terms.find(m);
    return it == m_terms.end() ? Scalar() : it->second;
}

Scalar GrassmannElement::body() const
{
    return coefficient(0);
}

GrassmannElement GrassmannElement::soul() const
{
    GrassmannElement r = *this;
    r.m_terms.erase(0);
    return r;
}

std::optional<Parity> GrassmannElement::parity() const
{
    std::optional<Parity> p;
    for (const auto &[m, c] : m_terms) {
        const Parity q = mask_parity(m);
        if (p && *p != q) {
            return std::nullopt;
        }
        p = q;
    }
    return p.value_or(Parity::even);
}

GrassmannElement GrassmannElement::even_part() const
{
    GrassmannElement r(m_n);
    for (const auto &[m, c] : m_terms) {
        if (mask_parity(m) == Parity::even) {
            r.m_terms.emplace(m, c);
        }
    }
    return r;
}

GrassmannElement GrassmannElement::odd_part() const
{
    GrassmannElement r(m_n);
    for (const auto &[m, c] : m_terms) {
        if (mask_parity(m) == Parity::odd) {
            r.m_terms.emplace(m, c);
        }
    }
    return r;
}

GrassmannElement GrassmannElement::pad(unsigned new_generator_count, unsigned offset) const
{
    if (offset + m_n > new_generator_count) {
        throw DimensionError("embedding does not fit into the target algebra");
    }
    GrassmannElement r(new_generator_count);
    for (const auto &[m, c] : m_terms) {
        r.m_terms.emplace(m << offset, c);
    }
    return r;
}

void GrassmannElement::add_term(OddMask m, const Scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void GrassmannElement::check_same(const GrassmannElement &o) const
{
    if (m_n != o.m_n) {
        throw DimensionError("Grassmann algebras differ: " + std::to_string(m_n) + " vs " + std::to_string(o.m_n)
                             + " generators");
    }
}

GrassmannElement &GrassmannElement::operator+=(const GrassmannElement &o)
{
    check_same(o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, c);
    }
    return *this;
}

GrassmannElement &GrassmannElement::operator-=(const GrassmannElement &o)
{
    check_same(o);
    for (const auto &[m, c] : o.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

GrassmannElement operator*(const GrassmannElement &a, const GrassmannElement &b)
{
    a.check_same(b);
    GrassmannElement r(a.m_n);
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            const int s = merge_sign(ma, mb);
            if (s == 0) {
                continue;
            }
            Scalar c = ca * cb;
            r.add_term(ma | mb, s > 0 ? c : -c);
        }
    }
    return r;
}

GrassmannElement &GrassmannElement::operator*=(const GrassmannElement &o)
{
    return *this = *this * o;
}

GrassmannElement &GrassmannElement::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, v] : m_terms) {
        v *= c;
    }
    return *this;
}

GrassmannElement GrassmannElement::operator-() const
{
    GrassmannElement r = *this;
    for (auto &[m, v] : r.m_terms) {
        v = -v;
    }
    return r;
}

GrassmannElement inverse_even(const GrassmannElement &a)
{
    if (a.odd_part().terms().size() != 0) {
        throw ParityError("inverse_even: element has an odd component");
    }
    const Scalar b = a.body();
    if (b.is_zero()) {
        throw SingularError("inverse_even: body is zero");
    }
    const Scalar binv = Scalar(1) / b;
    // a^-1 = b^-1 sum_k (-b^-1 n)^k, finite since n^(N/2+1) = 0.
    const GrassmannElement step = -(a.soul() * binv);
    GrassmannElement term(a.generator_count(), Scalar(1));
    GrassmannElement sum = term;
    for (unsigned k = 0; k < a.generator_count(); ++k) {
        term = term * step;
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum * binv;
}

GrassmannElement pow(const GrassmannElement &a, unsigned k)
{
    GrassmannElement r(a.generator_count(), Scalar(1));
    for (unsigned i = 0; i < k; ++i) {
        r = r * a;
    }
    return r;
}

namespace detail
{

void append_term(std::string &out, const Scalar &c, const std::string &factors)
{
    const bool negative = sgn(c.rational()) < 0;
    if (out.empty()) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c.rational());
    std::string gauss;
    if (c.gauss_exponent() != 0) {
        gauss = c.gauss_exponent() == 1 ? "s" : "s^" + std::to_string(c.gauss_exponent());
    }
    std::string rest = gauss;
    if (!factors.empty()) {
        rest += (rest.empty() ? "" : " ") + factors;
    }
    if (mag != 1 || rest.empty()) {
        out += mag.get_str();
        if (!rest.empty()) {
            out += " ";
        }
    }
    out += rest;
}

} // namespace detail

std::string GrassmannElement::str() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : m_terms) {
        std::string factors;
        for (unsigned i : mask_indices(m)) {
            factors += (factors.empty() ? "" : " ") + std::string("xi") + std::to_string(i + 1);
        }
        detail::append_term(out, c, factors);
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const GrassmannElement &g)
{
    return os << g.str();
}

} // namespace superint
