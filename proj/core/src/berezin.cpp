#include <superint/berezin.hpp>
#include <superint/errors.hpp>

#include <map>

namespace superint
{

IntegrationBackend IntegrationBackend::slice(unsigned offset, unsigned count) const
{
    if (kind == BackendKind::gaussian_moments) {
        return gaussian();
    }
    if (offset + count > box.size()) {
        throw DimensionError("backend box too small for slice");
    }
    return over_box(Box(box.begin() + offset, box.begin() + offset + count));
}

std::string IntegrationBackend::str() const
{
    if (kind == BackendKind::gaussian_moments) {
        return "gaussian";
    }
    std::string out = "box";
    for (const auto &iv : box) {
        out += " " + iv.str();
    }
    return out;
}

std::vector<std::string> default_basis_tag(const SuperDomainShape &shape)
{
    std::vector<std::string> tag;
    for (unsigned i = 0; i < shape.m; ++i) {
        tag.push_back("x" + std::to_string(i + 1));
    }
    for (unsigned j = 0; j < shape.n; ++j) {
        tag.push_back("xi" + std::to_string(j + 1));
    }
    return tag;
}

BerezinSection::BerezinSection(SuperFunction density, std::vector<std::string> basis_tag)
    : m_density(std::move(density)), m_tag(std::move(basis_tag))
{
    if (m_tag.empty()) {
        m_tag = default_basis_tag(m_density.shape());
    }
    if (m_tag.size() != m_density.shape().m + m_density.shape().n) {
        throw DimensionError("basis tag must name every coordinate");
    }
}

BerezinSection BerezinSection::left_multiply(const SuperFunction &f) const
{
    SuperFunction twisted = f.even_part();
    if (shape().n % 2 == 1) {
        twisted -= f.odd_part();
    } else {
        twisted += f.odd_part();
    }
    return BerezinSection(twisted * m_density, m_tag);
}

BerezinSection operator+(const BerezinSection &a, const BerezinSection &b)
{
    return BerezinSection(a.m_density + b.m_density, a.m_tag);
}

BerezinSection operator*(const BerezinSection &a, const Rational &c)
{
    return BerezinSection(a.m_density * c, a.m_tag);
}

std::string BerezinSection::str() const
{
    std::string out = "D(";
    for (std::size_t i = 0; i < m_tag.size(); ++i) {
        out += (i ? "," : "") + m_tag[i];
    }
    return out + ") . [" + m_density.str() + "]";
}

namespace
{

Rational rational_pow(const Rational &x, int k)
{
    Rational r(1);
    const Rational base = k < 0 ? Rational(1) / x : x;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
        r *= base;
    }
    return r;
}

// (k - 1)!! for even k >= 0
Rational double_factorial_below(int k)
{
    Rational r(1);
    for (int j = k - 1; j > 1; j -= 2) {
        r *= j;
    }
    return r;
}

Rational interval_moment(const Interval &iv, int e)
{
    if (e == -1) {
        throw IntegrationError("x^-1 has a logarithmic antiderivative");
    }
    const Rational &a = *iv.lo;
    const Rational &b = *iv.hi;
    if (e < 0 && sgn(a) <= 0 && sgn(b) >= 0) {
        throw IntegrationError("negative power integrated across 0");
    }
    return (rational_pow(b, e + 1) - rational_pow(a, e + 1)) / (e + 1);
}

} // namespace

Scalar integrate_polynomial(const Polynomial &p, const IntegrationBackend &backend)
{
    const unsigned m = p.nvars();
    Rational total(0);
    if (backend.kind == BackendKind::gaussian_moments) {
        for (const auto &[e, c] : p.terms()) {
            Rational v = c;
            for (int k : e) {
                if (k < 0) {
                    throw IntegrationError("negative power has no gaussian moment");
                }
                if (k % 2 == 1) {
                    v = 0;
                    break;
                }
                v *= double_factorial_below(k);
            }
            total += v;
        }
        return Scalar(total, static_cast<int>(m));
    }
    if (backend.box.size() != m) {
        throw DimensionError("backend box has " + std::to_string(backend.box.size()) + " axes, expected "
                             + std::to_string(m));
    }
    for (const auto &iv : backend.box) {
        if (!iv.is_bounded()) {
            throw IntegrationError("box backend needs bounded intervals");
        }
    }
    for (const auto &[e, c] : p.terms()) {
        Rational v = c;
        for (unsigned i = 0; i < m; ++i) {
            v *= interval_moment(backend.box[i], e[i]);
        }
        total += v;
    }
    return Scalar(total);
}

GrassmannElement integrate_graded(const BerezinSection &omega, const IntegrationBackend &backend)
{
    const auto &shape = omega.shape();
    if (shape.params != 0) {
        throw DimensionError("cannot integrate a section with even parameters");
    }
    if (backend.kind == BackendKind::gaussian_moments) {
        for (unsigned i = 0; i < shape.m; ++i) {
            if (!shape.box[i].is_all()) {
                throw DomainError("gaussian backend needs the whole real line on every axis");
            }
        }
    } else if (backend.box.size() != shape.m || !box_contains(shape.box, backend.box)) {
        throw DomainError("backend box " + backend.str() + " does not fit the domain " + shape.str());
    }
    const OddMask top = full_mask(shape.n);
    const bool negative = (shape.m * shape.n) % 2 == 1;
    GrassmannElement out(shape.aux);
    for (const auto &[mask, poly] : omega.density().coeffs()) {
        if ((mask & top) != top) {
            continue;
        }
        Scalar v = integrate_polynomial(poly, backend);
        out.add_term(mask >> shape.n, negative ? -v : v);
    }
    return out;
}

Scalar integrate(const BerezinSection &omega, const IntegrationBackend &backend)
{
    const auto g = integrate_graded(omega, backend);
    if (!g.soul().is_zero()) {
        throw DimensionError("integral depends on auxiliary odd parameters: " + g.str());
    }
    return g.body();
}

BerezinSection pullback_section(const SuperMorphism &phi, const BerezinSection &omega, const SamplingPolicy &policy)
{
    const auto &t = phi.target();
    const auto &s = omega.shape();
    if (s.m != t.m || s.n != t.n || s.even_count() != t.even_count() || s.odd_count() != t.odd_count()) {
        throw DimensionError("section lives on " + s.str() + ", morphism targets " + t.str());
    }
    if (policy.enabled && !preserves_orientation(phi, policy)) {
        throw DomainError("morphism does not preserve orientation on the sample grid");
    }
    const auto jac = jacobian(phi);
    const SuperFunction ber = berezinian(jac);
    return BerezinSection(ber * pullback(phi, omega.density(), policy), default_basis_tag(phi.source()));
}

SuperFunction lift_base(const SuperFunction &f, const SuperDomainShape &total)
{
    const auto &s = f.shape();
    if (s.params || s.aux || s.m > total.m || s.n > total.n) {
        throw DimensionError("lift_base: function does not fit the product");
    }
    std::vector<unsigned> map(s.m);
    for (unsigned i = 0; i < s.m; ++i) {
        map[i] = i;
    }
    SuperFunction r(total);
    for (const auto &[mask, poly] : f.coeffs()) {
        r.add_term(mask, poly.remap(total.even_count(), map));
    }
    return r;
}

SuperFunction lift_fibre(const SuperFunction &f, const SuperDomainShape &total)
{
    const auto &s = f.shape();
    if (s.params || s.aux || s.m > total.m || s.n > total.n) {
        throw DimensionError("lift_fibre: function does not fit the product");
    }
    const unsigned m0 = total.m - s.m, n0 = total.n - s.n;
    std::vector<unsigned> map(s.m);
    for (unsigned i = 0; i < s.m; ++i) {
        map[i] = m0 + i;
    }
    SuperFunction r(total);
    for (const auto &[mask, poly] : f.coeffs()) {
        r.add_term(mask << n0, poly.remap(total.even_count(), map));
    }
    return r;
}

BerezinSection product_section(const BerezinSection &omega1, const BerezinSection &omega2)
{
    const auto &b = omega1.shape();
    const auto &f = omega2.shape();
    const bool default_tags = omega1.basis_tag() == default_basis_tag(b) && omega2.basis_tag() == default_basis_tag(f);
    if (!default_tags) {
        for (const auto &a : omega1.basis_tag()) {
            for (const auto &c : omega2.basis_tag()) {
                if (a == c) {
                    throw StructuralError("coordinate name " + a + " used on both factors");
                }
            }
        }
    }
    const auto total = product_shape(b, f);
    // (D1 g)(D2 h) = (-1)^{q|g|} D1 D2 g h and D1 D2 = (-1)^{np} D12.
    SuperFunction g = omega1.density().even_part();
    if (f.n % 2 == 1) {
        g -= omega1.density().odd_part();
    } else {
        g += omega1.density().odd_part();
    }
    SuperFunction rho = lift_base(g, total) * lift_fibre(omega2.density(), total);
    if ((b.n * f.m) % 2 == 1) {
        rho = -rho;
    }
    std::vector<std::string> tag;
    const auto &t1 = omega1.basis_tag();
    const auto &t2 = omega2.basis_tag();
    if (default_tags) {
        tag = default_basis_tag(total);
    } else {
        tag.insert(tag.end(), t1.begin(), t1.begin() + b.m);
        tag.insert(tag.end(), t2.begin(), t2.begin() + f.m);
        tag.insert(tag.end(), t1.begin() + b.m, t1.end());
        tag.insert(tag.end(), t2.begin() + f.m, t2.end());
    }
    return BerezinSection(std::move(rho), std::move(tag));
}

FibreIntegral fibre_integrate(std::span<const ProductTerm> terms, const SuperDomainShape &base,
                              const IntegrationBackend &fibre_backend)
{
    FibreIntegral out{SuperFunction(base), 0, {}};
    bool have_exponent = false;
    for (const auto &t : terms) {
        const auto &bs = t.base.shape();
        if (bs.m != base.m || bs.n != base.n || bs.even_count() != base.even_count()
            || bs.odd_count() != base.odd_count()) {
            throw DimensionError("product term base factor does not live on the base");
        }
        const Scalar c = integrate(t.fibre, fibre_backend);
        if (c.is_zero() || t.base.is_zero()) {
            continue;
        }
        if (have_exponent && c.gauss_exponent() != out.gauss_exponent) {
            throw ExponentMismatchError("fibre integrals carry different powers of s");
        }
        have_exponent = true;
        out.gauss_exponent = c.gauss_exponent();
        out.value += t.base.reshaped(base) * c.rational();
        out.support.push_back(t.base_support.empty() ? base.box : t.base_support);
    }
    return out;
}

std::vector<std::pair<SuperFunction, SuperFunction>> split_product(const SuperFunction &f,
                                                                  const SuperDomainShape &base,
                                                                  const SuperDomainShape &fibre)
{
    const auto total = product_shape(base, fibre);
    const auto &s = f.shape();
    if (s.even_count() != total.even_count() || s.odd_count() != total.odd_count()) {
        throw DimensionError("split_product: function does not live on the product");
    }
    // Group the base factors by fibre monomial.
    std::map<std::pair<OddMask, Exponents>, SuperFunction> groups;
    const OddMask base_bits = full_mask(base.n);
    for (const auto &[mask, poly] : f.coeffs()) {
        const OddMask mb = mask & base_bits;
        const OddMask mf = mask >> base.n;
        for (const auto &[e, c] : poly.terms()) {
            Exponents eb(e.begin(), e.begin() + base.m);
            Exponents ef(e.begin() + base.m, e.end());
            auto it = groups.try_emplace({mf, ef}, SuperFunction(base)).first;
            it->second.add_term(mb, Polynomial::monomial(base.m, std::move(eb), c));
        }
    }
    std::vector<std::pair<SuperFunction, SuperFunction>> out;
    for (auto &[key, a] : groups) {
        if (a.is_zero()) {
            continue;
        }
        out.emplace_back(std::move(a), SuperFunction::monomial(fibre, key.first, Polynomial::monomial(fibre.m, key.second)));
    }
    return out;
}

FibreIntegral fibre_integrate(const SuperFunction &total, const BerezinSection &fibre_section,
                              const SuperDomainShape &base, const IntegrationBackend &fibre_backend)
{
    std::vector<ProductTerm> terms;
    for (auto &[a, b] : split_product(total, base, fibre_section.shape())) {
        terms.push_back({std::move(a), fibre_section.left_multiply(b), {}, {}});
    }
    return fibre_integrate(terms, base, fibre_backend);
}

Scalar integrate_base(const FibreIntegral &fi, const BerezinSection &omega_base, const IntegrationBackend &backend)
{
    const Scalar v = integrate(omega_base.left_multiply(fi.value), backend);
    return v * Scalar(Rational(1), fi.gauss_exponent);
}

} // namespace superint
