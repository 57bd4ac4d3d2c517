#include <superint/errors.hpp>
#include <superint/superdomain.hpp>

#include <algorithm>
#include <ostream>
#include <utility>

namespace superint
{

// ---------------------------------------------------------------------------------------
// Interval / shape

Interval Interval::closed(const Rational &a, const Rational &b)
{
    if (b < a) {
        throw DomainError("empty interval [" + a.get_str() + ", " + b.get_str() + "]");
    }
    return {a, b, false, false};
}

Interval Interval::above(const Rational &a)
{
    return {a, std::nullopt, true, false};
}

bool Interval::contains(const Rational &x) const
{
    if (lo && (lo_open ? x <= *lo : x < *lo)) {
        return false;
    }
    if (hi && (hi_open ? x >= *hi : x > *hi)) {
        return false;
    }
    return true;
}

bool Interval::contains(const Interval &inner) const
{
    if (lo) {
        if (!inner.lo) {
            return false;
        }
        if (*inner.lo < *lo || (*inner.lo == *lo && lo_open && !inner.lo_open)) {
            return false;
        }
    }
    if (hi) {
        if (!inner.hi) {
            return false;
        }
        if (*inner.hi > *hi || (*inner.hi == *hi && hi_open && !inner.hi_open)) {
            return false;
        }
    }
    return true;
}

std::vector<Rational> Interval::samples(unsigned count) const
{
    std::vector<Rational> out;
    if (count == 0) {
        return out;
    }
    if (lo && hi) {
        Rational a = *lo, b = *hi;
        if (count == 1) {
            out.push_back((a + b) / 2);
            return out;
        }
        // Open ends are replaced by points a quarter step inside.
        const Rational step = (b - a) / (count - 1);
        for (unsigned k = 0; k < count; ++k) {
            Rational x = a + step * k;
            if (k == 0 && lo_open) {
                x += step / 4;
            }
            if (k + 1 == count && hi_open) {
                x -= step / 4;
            }
            out.push_back(x);
        }
        return out;
    }
    if (lo) {
        const Rational start = lo_open ? *lo + Rational(1, 2) : *lo;
        for (unsigned k = 0; k < count; ++k) {
            out.push_back(start + k);
        }
        return out;
    }
    if (hi) {
        const Rational start = hi_open ? *hi - Rational(1, 2) : *hi;
        for (unsigned k = 0; k < count; ++k) {
            out.push_back(start - k);
        }
        return out;
    }
    const int half = static_cast<int>(count) / 2;
    for (unsigned k = 0; k < count; ++k) {
        out.push_back(Rational(static_cast<int>(k) - half));
    }
    return out;
}

std::string Interval::str() const
{
    if (is_all()) {
        return "R";
    }
    std::string out = lo ? (lo_open ? "(" : "[") + lo->get_str() : "(-inf";
    out += ", ";
    out += hi ? hi->get_str() + (hi_open ? ")" : "]") : "inf)";
    return out;
}

bool box_contains(const Box &outer, const Box &inner)
{
    if (outer.size() != inner.size()) {
        return false;
    }
    for (std::size_t i = 0; i < outer.size(); ++i) {
        if (!outer[i].contains(inner[i])) {
            return false;
        }
    }
    return true;
}

SuperDomainShape SuperDomainShape::make(unsigned m, unsigned n, Box box, unsigned aux)
{
    if (box.empty()) {
        box.assign(m, Interval::all());
    }
    if (box.size() != m) {
        throw DimensionError("box has " + std::to_string(box.size()) + " intervals for " + std::to_string(m)
                             + " even coordinates");
    }
    if (n + aux > max_odd_generators) {
        throw DimensionError("too many odd generators");
    }
    SuperDomainShape s;
    s.m = m;
    s.n = n;
    s.aux = aux;
    s.box = std::move(box);
    return s;
}

SuperDomainShape SuperDomainShape::with_parameters(unsigned extra_params, unsigned extra_aux,
                                                   const Box &param_box) const
{
    SuperDomainShape s = *this;
    s.params += extra_params;
    s.aux += extra_aux;
    if (param_box.empty()) {
        s.box.insert(s.box.end(), extra_params, Interval::all());
    } else {
        if (param_box.size() != extra_params) {
            throw DimensionError("parameter box has wrong dimension");
        }
        s.box.insert(s.box.end(), param_box.begin(), param_box.end());
    }
    if (s.n + s.aux > max_odd_generators) {
        throw DimensionError("too many odd generators");
    }
    return s;
}

SuperDomainShape SuperDomainShape::bare() const
{
    SuperDomainShape s = *this;
    s.params = 0;
    s.aux = 0;
    s.box.resize(m);
    return s;
}

std::string SuperDomainShape::str() const
{
    std::string out = "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    if (params || aux) {
        out += " + params(" + std::to_string(params) + "|" + std::to_string(aux) + ")";
    }
    if (!box.empty()) {
        out += " box";
        for (const auto &iv : box) {
            out += " " + iv.str();
        }
    }
    return out;
}

SuperDomainShape product_shape(const SuperDomainShape &base, const SuperDomainShape &fibre)
{
    if (base.params || base.aux || fibre.params || fibre.aux) {
        throw DimensionError("product of superdomains with generalized-point parameters");
    }
    Box box = base.box;
    box.insert(box.end(), fibre.box.begin(), fibre.box.end());
    return SuperDomainShape::make(base.m + fibre.m, base.n + fibre.n, std::move(box));
}

// ---------------------------------------------------------------------------------------
// SuperFunction

SuperFunction::SuperFunction(SuperDomainShape shape) : m_shape(std::move(shape))
{
    if (m_shape.box.size() != m_shape.even_count()) {
        m_shape.box.resize(m_shape.even_count(), Interval::all());
    }
}

SuperFunction::SuperFunction(SuperDomainShape shape, const Rational &c) : SuperFunction(std::move(shape))
{
    add_term(0, Polynomial(m_shape.even_count(), c));
}

SuperFunction SuperFunction::even_coordinate(const SuperDomainShape &shape, unsigned i)
{
    return from_polynomial(shape, Polynomial::variable(shape.even_count(), i));
}

SuperFunction SuperFunction::odd_coordinate(const SuperDomainShape &shape, unsigned j)
{
    if (j >= shape.odd_count()) {
        throw DimensionError("odd coordinate index out of range");
    }
    return monomial(shape, OddMask{1} << j, Polynomial(shape.even_count(), Rational(1)));
}

SuperFunction SuperFunction::from_polynomial(const SuperDomainShape &shape, Polynomial p)
{
    return monomial(shape, 0, std::move(p));
}

SuperFunction SuperFunction::monomial(const SuperDomainShape &shape, OddMask m, Polynomial p)
{
    SuperFunction f(shape);
    if (m & ~full_mask(shape.odd_count())) {
        throw DimensionError("odd monomial outside the shape");
    }
    f.add_term(m, p);
    return f;
}

SuperFunction SuperFunction::from_grassmann(const SuperDomainShape &shape, const GrassmannElement &g)
{
    if (g.generator_count() != shape.odd_count()) {
        throw DimensionError("Grassmann element has wrong generator count for this shape");
    }
    SuperFunction f(shape);
    for (const auto &[m, c] : g.terms()) {
        if (c.gauss_exponent() != 0) {
            throw ExponentMismatchError("superfunction coefficients must be rational");
        }
        f.add_term(m, Polynomial(shape.even_count(), c.rational()));
    }
    return f;
}

Polynomial SuperFunction::coefficient(OddMask m) const
{
    const auto it = m_coeffs.find(m);
    return it == m_coeffs.end() ? Polynomial(m_shape.even_count()) : it->second;
}

Polynomial SuperFunction::body() const
{
    return coefficient(0);
}

SuperFunction SuperFunction::soul() const
{
    SuperFunction r = *this;
    r.m_coeffs.erase(0);
    return r;
}

std::optional<Parity> SuperFunction::parity() const
{
    std::optional<Parity> p;
    for (const auto &[m, c] : m_coeffs) {
        const Parity q = mask_parity(m);
        if (p && *p != q) {
            return std::nullopt;
        }
        p = q;
    }
    return p.value_or(Parity::even);
}

SuperFunction SuperFunction::even_part() const
{
    SuperFunction r(m_shape);
    for (const auto &[m, c] : m_coeffs) {
        if (mask_parity(m) == Parity::even) {
            r.m_coeffs.emplace(m, c);
        }
    }
    return r;
}

SuperFunction SuperFunction::odd_part() const
{
    SuperFunction r(m_shape);
    for (const auto &[m, c] : m_coeffs) {
        if (mask_parity(m) == Parity::odd) {
            r.m_coeffs.emplace(m, c);
        }
    }
    return r;
}

void SuperFunction::add_term(OddMask m, const Polynomial &p)
{
    if (p.is_zero()) {
        return;
    }
    if (p.nvars() != m_shape.even_count()) {
        throw DimensionError("coefficient polynomial has wrong number of variables");
    }
    auto [it, inserted] = m_coeffs.try_emplace(m, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) {
            m_coeffs.erase(it);
        }
    }
}

void SuperFunction::check_same(const SuperFunction &o) const
{
    if (m_shape.even_count() != o.m_shape.even_count() || m_shape.odd_count() != o.m_shape.odd_count()
        || m_shape.m != o.m_shape.m || m_shape.n != o.m_shape.n) {
        throw DimensionError("superfunctions live on different shapes: " + m_shape.str() + " vs "
                             + o.m_shape.str());
    }
}

SuperFunction &SuperFunction::operator+=(const SuperFunction &o)
{
    check_same(o);
    for (const auto &[m, p] : o.m_coeffs) {
        add_term(m, p);
    }
    return *this;
}

SuperFunction &SuperFunction::operator-=(const SuperFunction &o)
{
    check_same(o);
    for (const auto &[m, p] : o.m_coeffs) {
        add_term(m, -p);
    }
    return *this;
}

SuperFunction &SuperFunction::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &[m, p] : m_coeffs) {
        p *= c;
    }
    return *this;
}

SuperFunction &SuperFunction::operator*=(const Scalar &c)
{
    if (c.gauss_exponent() != 0) {
        throw ExponentMismatchError("superfunction coefficients must be rational");
    }
    return *this *= c.rational();
}

SuperFunction operator*(const SuperFunction &a, const SuperFunction &b)
{
    a.check_same(b);
    SuperFunction r(a.m_shape);
    for (const auto &[ma, pa] : a.m_coeffs) {
        for (const auto &[mb, pb] : b.m_coeffs) {
            const int s = merge_sign(ma, mb);
            if (s == 0) {
                continue;
            }
            Polynomial prod = pa * pb;
            if (s < 0) {
                prod = -prod;
            }
            r.add_term(ma | mb, prod);
        }
    }
    return r;
}

SuperFunction SuperFunction::operator-() const
{
    SuperFunction r = *this;
    for (auto &[m, p] : r.m_coeffs) {
        p = -p;
    }
    return r;
}

SuperFunction SuperFunction::derive_even(unsigned i) const
{
    if (i >= m_shape.even_count()) {
        throw DimensionError("even derivative index " + std::to_string(i) + " out of range");
    }
    SuperFunction r(m_shape);
    for (const auto &[m, p] : m_coeffs) {
        r.add_term(m, p.derivative(i));
    }
    return r;
}

SuperFunction SuperFunction::derive_odd(unsigned j) const
{
    if (j >= m_shape.odd_count()) {
        throw DimensionError("odd derivative index " + std::to_string(j) + " out of range");
    }
    const OddMask bit = OddMask{1} << j;
    SuperFunction r(m_shape);
    for (const auto &[m, p] : m_coeffs) {
        if (!(m & bit)) {
            continue;
        }
        // Moving d/dxi_j past the generators in front of xi_j.
        const bool negative = degree(m & (bit - 1u)) % 2 == 1;
        r.add_term(m & ~bit, negative ? -p : p);
    }
    return r;
}

SuperFunction SuperFunction::reshaped(const SuperDomainShape &shape) const
{
    if (shape.even_count() != m_shape.even_count() || shape.odd_count() != m_shape.odd_count()) {
        throw DimensionError("reshape changes variable counts");
    }
    SuperFunction r = *this;
    r.m_shape = shape;
    return r;
}

GrassmannElement SuperFunction::evaluate(std::span<const Rational> point) const
{
    GrassmannElement g(m_shape.odd_count());
    for (const auto &[m, p] : m_coeffs) {
        g.add_term(m, Scalar(p.evaluate(point)));
    }
    return g;
}

std::string SuperFunction::str() const
{
    if (m_coeffs.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, p] : m_coeffs) {
        if (!out.empty()) {
            out += "\n";
        }
        out += p.str();
        out += " :";
        for (unsigned i : mask_indices(m)) {
            out += " xi" + std::to_string(i + 1);
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const SuperFunction &f)
{
    return os << f.str();
}

SuperFunction inverse_even(const SuperFunction &f)
{
    if (!f.odd_part().is_zero()) {
        throw ParityError("inverse_even: superfunction has an odd component");
    }
    const Polynomial body = f.body();
    if (body.is_zero()) {
        throw SingularError("inverse_even: body is zero");
    }
    const SuperFunction body_inv = SuperFunction::from_polynomial(f.shape(), body.reciprocal());
    const SuperFunction step = -(f.soul() * body_inv);
    SuperFunction term = one_like(f);
    SuperFunction sum = term;
    for (unsigned k = 0; k < f.shape().odd_count(); ++k) {
        term = term * step;
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum * body_inv;
}

SuperFunction pow(const SuperFunction &f, int k)
{
    if (k < 0) {
        return pow(inverse_even(f), -k);
    }
    SuperFunction r = one_like(f);
    for (int i = 0; i < k; ++i) {
        r = r * f;
    }
    return r;
}

// ---------------------------------------------------------------------------------------
// SuperMorphism

SuperMorphism::SuperMorphism(SuperDomainShape source, SuperDomainShape target,
                             std::vector<SuperFunction> even_components, std::vector<SuperFunction> odd_components,
                             bool oriented)
    : m_source(std::move(source)), m_target(std::move(target)), m_even(std::move(even_components)),
      m_odd(std::move(odd_components)), m_oriented(oriented)
{
    if (m_even.size() != m_target.m || m_odd.size() != m_target.n) {
        throw DimensionError("morphism needs one component per target coordinate");
    }
    if (m_target.params > m_source.params || m_target.aux > m_source.aux) {
        throw DimensionError("target parameters must be available on the source");
    }
    for (std::size_t i = 0; i < m_even.size(); ++i) {
        if (m_even[i].shape().even_count() != m_source.even_count()
            || m_even[i].shape().odd_count() != m_source.odd_count()) {
            throw DimensionError("even component " + std::to_string(i) + " is not a function on the source");
        }
        m_even[i] = m_even[i].reshaped(m_source);
        const auto p = m_even[i].parity();
        if (!p || *p != Parity::even) {
            throw ParityError("even component " + std::to_string(i) + " is not even");
        }
    }
    for (std::size_t j = 0; j < m_odd.size(); ++j) {
        if (m_odd[j].shape().even_count() != m_source.even_count()
            || m_odd[j].shape().odd_count() != m_source.odd_count()) {
            throw DimensionError("odd component " + std::to_string(j) + " is not a function on the source");
        }
        m_odd[j] = m_odd[j].reshaped(m_source);
        const auto p = m_odd[j].parity();
        if (!m_odd[j].is_zero() && (!p || *p != Parity::odd)) {
            throw ParityError("odd component " + std::to_string(j) + " is not odd");
        }
    }
}

SuperMorphism SuperMorphism::identity(const SuperDomainShape &shape)
{
    std::vector<SuperFunction> even, odd;
    for (unsigned i = 0; i < shape.m; ++i) {
        even.push_back(SuperFunction::even_coordinate(shape, i));
    }
    for (unsigned j = 0; j < shape.n; ++j) {
        odd.push_back(SuperFunction::odd_coordinate(shape, j));
    }
    return SuperMorphism(shape, shape, std::move(even), std::move(odd));
}

SuperFunction SuperMorphism::even_image(unsigned i) const
{
    if (i < m_target.m) {
        return m_even[i];
    }
    return SuperFunction::even_coordinate(m_source, m_source.m + (i - m_target.m));
}

SuperFunction SuperMorphism::odd_image(unsigned j) const
{
    if (j < m_target.n) {
        return m_odd[j];
    }
    return SuperFunction::odd_coordinate(m_source, m_source.n + (j - m_target.n));
}

namespace
{

// Calls fn(point) for every point of the sample grid over the box.
template <class Fn>
std::size_t for_each_sample(const Box &box, unsigned per_axis, Fn &&fn)
{
    std::vector<std::vector<Rational>> axes;
    for (const auto &iv : box) {
        axes.push_back(iv.samples(per_axis));
    }
    std::vector<Rational> point(box.size());
    std::vector<std::size_t> idx(box.size(), 0);
    std::size_t count = 0;
    while (true) {
        for (std::size_t a = 0; a < box.size(); ++a) {
            point[a] = axes[a][idx[a]];
        }
        fn(std::span<const Rational>(point));
        ++count;
        std::size_t a = 0;
        for (; a < box.size(); ++a) {
            if (++idx[a] < axes[a].size()) {
                break;
            }
            idx[a] = 0;
        }
        if (a == box.size()) {
            break;
        }
    }
    return count;
}

Rational rational_det(RationalMatrix m)
{
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m(piv, c)) == 0) {
            ++piv;
        }
        if (piv == n) {
            return Rational(0);
        }
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(c, j), m(piv, j));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) {
                m(i, j) -= f * m(c, j);
            }
        }
    }
    return det;
}

} // namespace

std::size_t check_body_in_box(const SuperMorphism &phi, const SamplingPolicy &policy)
{
    if (!policy.enabled) {
        return 0;
    }
    std::vector<unsigned> to_check;
    for (unsigned i = 0; i < phi.target().m; ++i) {
        if (!phi.target().box[i].is_all()) {
            to_check.push_back(i);
        }
    }
    if (to_check.empty()) {
        return 0;
    }
    std::vector<Polynomial> bodies;
    for (unsigned i : to_check) {
        bodies.push_back(phi.even_components()[i].body());
    }
    return for_each_sample(phi.source().box, policy.points_per_axis, [&](std::span<const Rational> pt) {
        for (std::size_t k = 0; k < to_check.size(); ++k) {
            Rational v;
            try {
                v = bodies[k].evaluate(pt);
            } catch (const DomainError &) {
                throw DomainError("body of component " + std::to_string(to_check[k]) + " is undefined at a sample point");
            }
            if (!phi.target().box[to_check[k]].contains(v)) {
                throw DomainError("body image " + v.get_str() + " of component " + std::to_string(to_check[k])
                                  + " leaves the target interval " + phi.target().box[to_check[k]].str());
            }
        }
    });
}

SuperFunction pullback(const SuperMorphism &phi, const SuperFunction &f, const SamplingPolicy &policy)
{
    const auto &tgt = phi.target();
    if (f.shape().even_count() != tgt.even_count() || f.shape().odd_count() != tgt.odd_count()
        || f.shape().m != tgt.m || f.shape().n != tgt.n) {
        throw DimensionError("pullback: function shape " + f.shape().str() + " does not match target "
                             + tgt.str());
    }
    check_body_in_box(phi, policy);
    const auto &src = phi.source();

    std::vector<SuperFunction> even_img, odd_img;
    for (unsigned i = 0; i < tgt.even_count(); ++i) {
        even_img.push_back(phi.even_image(i));
    }
    for (unsigned j = 0; j < tgt.odd_count(); ++j) {
        odd_img.push_back(phi.odd_image(j));
    }
    std::map<std::pair<unsigned, int>, SuperFunction> powers;
    auto power = [&](unsigned i, int k) -> const SuperFunction & {
        auto it = powers.find({i, k});
        if (it != powers.end()) {
            return it->second;
        }
        SuperFunction v(src);
        if (k == 0) {
            v = SuperFunction(src, Rational(1));
        } else if (k == 1) {
            v = even_img[i];
        } else if (k == -1) {
            v = inverse_even(even_img[i]);
        } else {
            const int step = k > 0 ? 1 : -1;
            // Recursion depth bounded by |k|.
            auto prev = powers.find({i, k - step});
            SuperFunction base = prev != powers.end() ? prev->second : pow(even_img[i], k - step);
            v = base * (k > 0 ? even_img[i] : inverse_even(even_img[i]));
        }
        return powers.emplace(std::pair{i, k}, std::move(v)).first->second;
    };

    SuperFunction result(src);
    for (const auto &[mask, poly] : f.coeffs()) {
        SuperFunction odd_factor(src, Rational(1));
        for (unsigned j : mask_indices(mask)) {
            odd_factor = odd_factor * odd_img[j];
        }
        if (odd_factor.is_zero()) {
            continue;
        }
        SuperFunction even_factor(src);
        for (const auto &[e, c] : poly.terms()) {
            SuperFunction term(src, c);
            for (unsigned i = 0; i < e.size(); ++i) {
                if (e[i] != 0) {
                    term = term * power(i, e[i]);
                }
            }
            even_factor += term;
        }
        result += odd_factor * even_factor;
    }
    return result;
}

SuperMorphism compose(const SuperMorphism &phi, const SuperMorphism &psi, const SamplingPolicy &policy)
{
    if (!(phi.target() == psi.source())) {
        throw DimensionError("compose: target " + phi.target().str() + " differs from source "
                             + psi.source().str());
    }
    check_body_in_box(phi, policy);
    const SamplingPolicy no_check{false, policy.points_per_axis};
    std::vector<SuperFunction> even, odd;
    for (const auto &c : psi.even_components()) {
        even.push_back(pullback(phi, c, no_check));
    }
    for (const auto &c : psi.odd_components()) {
        odd.push_back(pullback(phi, c, no_check));
    }
    return SuperMorphism(phi.source(), psi.target(), std::move(even), std::move(odd),
                         phi.oriented() && psi.oriented());
}

FunctionMatrix jacobian_wrt(const SuperMorphism &phi, std::span<const unsigned> even_sources,
                            std::span<const unsigned> odd_sources)
{
    const auto &tgt = phi.target();
    if (even_sources.size() != tgt.m || odd_sources.size() != tgt.n) {
        throw DimensionError("jacobian: source and target graded dimensions differ");
    }
    const unsigned n = tgt.m + tgt.n;
    std::vector<SuperFunction> entries;
    entries.reserve(n * n);
    auto derive = [&](unsigned row, const SuperFunction &comp) {
        return row < tgt.m ? comp.derive_even(even_sources[row]) : comp.derive_odd(odd_sources[row - tgt.m]);
    };
    for (unsigned row = 0; row < n; ++row) {
        for (unsigned col = 0; col < n; ++col) {
            const SuperFunction &comp = col < tgt.m ? phi.even_components()[col] : phi.odd_components()[col - tgt.m];
            entries.push_back(derive(row, comp));
        }
    }
    return FunctionMatrix(tgt.m, tgt.n, std::move(entries), SuperFunction(phi.source()));
}

FunctionMatrix jacobian(const SuperMorphism &phi)
{
    const auto &src = phi.source();
    if (src.m != phi.target().m || src.n != phi.target().n) {
        throw DimensionError("jacobian: source " + src.str() + " and target " + phi.target().str()
                             + " have different graded dimensions");
    }
    std::vector<unsigned> ev(src.m), od(src.n);
    for (unsigned i = 0; i < src.m; ++i) {
        ev[i] = i;
    }
    for (unsigned j = 0; j < src.n; ++j) {
        od[j] = j;
    }
    return jacobian_wrt(phi, ev, od);
}

bool preserves_orientation(const SuperMorphism &phi, const SamplingPolicy &policy)
{
    const auto &src = phi.source();
    const unsigned m = phi.target().m;
    if (src.m != m) {
        throw DimensionError("orientation check needs equal even dimensions");
    }
    if (m == 0) {
        return true;
    }
    std::vector<Polynomial> body_jac;
    for (unsigned r = 0; r < m; ++r) {
        for (unsigned c = 0; c < m; ++c) {
            body_jac.push_back(phi.even_components()[c].body().derivative(r));
        }
    }
    bool positive = true;
    auto test = [&](std::span<const Rational> pt) {
        RationalMatrix j(m, m);
        for (unsigned r = 0; r < m; ++r) {
            for (unsigned c = 0; c < m; ++c) {
                j(r, c) = body_jac[r * m + c].evaluate(pt);
            }
        }
        if (rational_det(j) <= 0) {
            positive = false;
        }
    };
    for_each_sample(src.box, std::max(policy.points_per_axis, 1u), test);
    return positive;
}

SuperMorphism projection_first(const SuperDomainShape &a, const SuperDomainShape &b)
{
    const auto src = product_shape(a, b);
    std::vector<SuperFunction> even, odd;
    for (unsigned i = 0; i < a.m; ++i) {
        even.push_back(SuperFunction::even_coordinate(src, i));
    }
    for (unsigned j = 0; j < a.n; ++j) {
        odd.push_back(SuperFunction::odd_coordinate(src, j));
    }
    return SuperMorphism(src, a, std::move(even), std::move(odd));
}

SuperMorphism projection_second(const SuperDomainShape &a, const SuperDomainShape &b)
{
    const auto src = product_shape(a, b);
    std::vector<SuperFunction> even, odd;
    for (unsigned i = 0; i < b.m; ++i) {
        even.push_back(SuperFunction::even_coordinate(src, a.m + i));
    }
    for (unsigned j = 0; j < b.n; ++j) {
        odd.push_back(SuperFunction::odd_coordinate(src, a.n + j));
    }
    return SuperMorphism(src, b, std::move(even), std::move(odd));
}

SuperMorphism pair(const SuperMorphism &phi, const SuperMorphism &psi)
{
    if (!(phi.source() == psi.source())) {
        throw DimensionError("pair: morphisms have different sources");
    }
    const auto tgt = product_shape(phi.target(), psi.target());
    auto even = phi.even_components();
    even.insert(even.end(), psi.even_components().begin(), psi.even_components().end());
    auto odd = phi.odd_components();
    odd.insert(odd.end(), psi.odd_components().begin(), psi.odd_components().end());
    return SuperMorphism(phi.source(), tgt, std::move(even), std::move(odd), phi.oriented() && psi.oriented());
}

SuperMorphism product(const SuperMorphism &phi, const SuperMorphism &psi)
{
    const auto p1 = projection_first(phi.source(), psi.source());
    const auto p2 = projection_second(phi.source(), psi.source());
    return pair(compose(p1, phi), compose(p2, psi));
}

SuperMorphism constant_morphism(const SuperDomainShape &source, const SuperDomainShape &target,
                                std::span<const Rational> point)
{
    if (point.size() != target.m) {
        throw DimensionError("constant morphism: point has wrong dimension");
    }
    std::vector<SuperFunction> even, odd;
    for (unsigned i = 0; i < target.m; ++i) {
        even.emplace_back(source, point[i]);
    }
    for (unsigned j = 0; j < target.n; ++j) {
        odd.emplace_back(source);
    }
    return SuperMorphism(source, target, std::move(even), std::move(odd));
}

} // namespace superint
