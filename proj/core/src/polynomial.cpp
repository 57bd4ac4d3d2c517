#include <superint/errors.hpp>
#include <superint/grassmann.hpp>
#include <superint/polynomial.hpp>

#include <numeric>

namespace superint
{

namespace
{

int total(const Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

Rational rational_pow(const Rational &x, int k)
{
    if (k < 0) {
        if (sgn(x) == 0) {
            throw DomainError("negative power of zero");
        }
        return rational_pow(Rational(1) / x, -k);
    }
    Rational r(1);
    for (int i = 0; i < k; ++i) {
        r *= x;
    }
    return r;
}

} // namespace

bool ExponentOrder::operator()(const Exponents &a, const Exponents &b) const noexcept
{
    const int ta = total(a), tb = total(b);
    if (ta != tb) {
        return ta < tb;
    }
    // Within a degree, larger leading exponents come first (x1^2 before x1 x2).
    return b < a;
}

Polynomial::Polynomial(unsigned nvars) : m_nvars(nvars) {}

Polynomial::Polynomial(unsigned nvars, const Rational &c) : m_nvars(nvars)
{
    add_term(Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(unsigned nvars, unsigned i)
{
    if (i >= nvars) {
        throw DimensionError("variable index out of range");
    }
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e));
}

Polynomial Polynomial::monomial(unsigned nvars, Exponents e, const Rational &c)
{
    if (e.size() != nvars) {
        throw DimensionError("exponent vector has wrong length");
    }
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
}

std::optional<Rational> Polynomial::constant_value() const
{
    if (m_terms.empty()) {
        return Rational(0);
    }
    if (m_terms.size() == 1) {
        const auto &[e, c] = *m_terms.begin();
        for (int k : e) {
            if (k != 0) {
                return std::nullopt;
            }
        }
        return c;
    }
    return std::nullopt;
}

Rational Polynomial::coefficient(const Exponents &e) const
{
    const auto it = m_terms.find(e);
    return it == m_terms.end() ? Rational(0) : it->second;
}

bool Polynomial::has_negative_exponents() const
{
    for (const auto &[e, c] : m_terms) {
        for (int k : e) {
            if (k < 0) {
                return true;
            }
        }
    }
    return false;
}

int Polynomial::max_abs_degree() const
{
    int best = -1;
    for (const auto &[e, c] : m_terms) {
        int d = 0;
        for (int k : e) {
            d += k < 0 ? -k : k;
        }
        best = std::max(best, d);
    }
    return best;
}

void Polynomial::add_term(const Exponents &e, const Rational &c)
{
    if (sgn(c) == 0) {
        return;
    }
    if (e.size() != m_nvars) {
        throw DimensionError("exponent vector has wrong length");
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            m_terms.erase(it);
        }
    }
}

void Polynomial::check_same(const Polynomial &o) const
{
    if (m_nvars != o.m_nvars) {
        throw DimensionError("polynomials in different numbers of variables");
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    check_same(o);
    for (const auto &[e, c] : o.m_terms) {
        add_term(e, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    check_same(o);
    for (const auto &[e, c] : o.m_terms) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, v] : m_terms) {
        v *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    a.check_same(b);
    Polynomial r(a.m_nvars);
    Exponents e(a.m_nvars);
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            for (unsigned i = 0; i < a.m_nvars; ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto &[e, v] : r.m_terms) {
        v = -v;
    }
    return r;
}

Polynomial Polynomial::derivative(unsigned i) const
{
    if (i >= m_nvars) {
        throw DimensionError("derivative index out of range");
    }
    Polynomial r(m_nvars);
    for (const auto &[e, c] : m_terms) {
        if (e[i] == 0) {
            continue;
        }
        Exponents f = e;
        --f[i];
        r.add_term(f, c * e[i]);
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != m_nvars) {
        throw DimensionError("evaluation point has wrong dimension");
    }
    Rational sum(0);
    for (const auto &[e, c] : m_terms) {
        Rational t = c;
        for (unsigned i = 0; i < m_nvars; ++i) {
            if (e[i] != 0) {
                t *= rational_pow(point[i], e[i]);
            }
        }
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::reciprocal() const
{
    if (m_terms.size() != 1) {
        throw SingularError("polynomial " + str() + " is not a unit in the Laurent ring");
    }
    const auto &[e, c] = *m_terms.begin();
    Exponents f = e;
    for (int &k : f) {
        k = -k;
    }
    return monomial(m_nvars, std::move(f), Rational(1) / c);
}

Polynomial Polynomial::remap(unsigned new_nvars, std::span<const unsigned> map) const
{
    if (map.size() != m_nvars) {
        throw DimensionError("variable map has wrong length");
    }
    Polynomial r(new_nvars);
    for (const auto &[e, c] : m_terms) {
        Exponents f(new_nvars, 0);
        for (unsigned i = 0; i < m_nvars; ++i) {
            if (map[i] >= new_nvars) {
                throw DimensionError("variable map target out of range");
            }
            f[map[i]] += e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

std::string default_even_name(unsigned i)
{
    return "x" + std::to_string(i + 1);
}

std::string Polynomial::str(const std::function<std::string(unsigned)> &name) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[e, c] : m_terms) {
        std::string factors;
        for (unsigned i = 0; i < m_nvars; ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!factors.empty()) {
                factors += " ";
            }
            factors += name(i);
            if (e[i] != 1) {
                factors += "^" + std::to_string(e[i]);
            }
        }
        detail::append_term(out, Scalar(c), factors);
    }
    return out;
}

std::string Polynomial::str() const
{
    return str(default_even_name);
}

} // namespace superint
