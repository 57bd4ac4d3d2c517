#include <superint/errors.hpp>
#include <superint/supergroup.hpp>

#include <algorithm>
#include <map>

namespace superint
{

namespace
{

SuperFunction ev(const SuperDomainShape &s, unsigned i)
{
    return SuperFunction::even_coordinate(s, i);
}

SuperFunction od(const SuperDomainShape &s, unsigned j)
{
    return SuperFunction::odd_coordinate(s, j);
}

SuperFunction cst(const SuperDomainShape &s, const Rational &c)
{
    return SuperFunction(s, c);
}

bool same_components(const SuperMorphism &a, const SuperMorphism &b)
{
    return a.even_components() == b.even_components() && a.odd_components() == b.odd_components();
}

// h -> (h, e) into H x G
SuperMorphism at_unit_second(const SuperDomainShape &h, const SuperGroupChart &g)
{
    return pair(SuperMorphism::identity(h), unit_morphism(g, h));
}

} // namespace

SuperMorphism unit_morphism(const SuperGroupChart &g, const SuperDomainShape &source)
{
    return constant_morphism(source, g.shape, g.unit);
}

GroupLawReport validate_group_laws(const SuperGroupChart &g)
{
    const auto &s = g.shape;
    const auto id = SuperMorphism::identity(s);
    GroupLawReport r;
    const auto lhs = compose(product(g.mul, id), g.mul);
    const auto rhs = compose(product(id, g.mul), g.mul);
    r.associative = same_components(lhs, rhs);
    const auto e = unit_morphism(g, s);
    r.left_unit = same_components(compose(pair(e, id), g.mul), id);
    r.right_unit = same_components(compose(pair(id, e), g.mul), id);
    r.left_inverse = same_components(compose(pair(g.inv, id), g.mul), e);
    r.right_inverse = same_components(compose(pair(id, g.inv), g.mul), e);
    return r;
}

LieSuperAlgebra group_lie_algebra(const SuperGroupChart &g)
{
    const auto &s = g.shape;
    const unsigned m = s.m, n = s.n, d = m + n;
    if (g.generator_names.size() != d) {
        throw DimensionError("one generator name per coordinate is required");
    }
    const auto law = validate_group_laws(g);
    if (!law.ok()) {
        throw StructuralError("group laws fail for " + g.name);
    }
    const auto at_e = pair(SuperMorphism::identity(s), unit_morphism(g, s));
    auto component = [&](unsigned k) -> const SuperFunction & {
        return k < m ? g.mul.even_components()[k] : g.mul.odd_components()[k - m];
    };
    // v[j][k] = d/dy_j mul^k (x, y) at y = e
    std::vector<std::vector<SuperFunction>> v(d);
    for (unsigned j = 0; j < d; ++j) {
        for (unsigned k = 0; k < d; ++k) {
            const auto &c = component(k);
            const auto dj = j < m ? c.derive_even(m + j) : c.derive_odd(n + (j - m));
            v[j].push_back(pullback(at_e, dj));
        }
    }
    auto derive_at_unit = [&](unsigned i, const SuperFunction &f) {
        const auto di = i < m ? f.derive_even(i) : f.derive_odd(i - m);
        return di.evaluate(g.unit).body().rational();
    };
    std::vector<LieGenerator> basis;
    for (unsigned i = 0; i < d; ++i) {
        basis.push_back({g.generator_names[i], i < m ? Parity::even : Parity::odd});
    }
    std::vector<Rational> scale = g.generator_scale;
    if (scale.empty()) {
        scale.assign(d, Rational(1));
    }
    if (scale.size() != d) {
        throw DimensionError("one generator scale per coordinate is required");
    }
    LieSuperAlgebra::Table t(d, std::vector<LieVector>(d, LieVector(d)));
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = 0; j < d; ++j) {
            const int s_ij = koszul_sign(basis[i].parity, basis[j].parity);
            for (unsigned k = 0; k < d; ++k) {
                const Rational c = derive_at_unit(i, v[j][k]) - s_ij * derive_at_unit(j, v[i][k]);
                t[i][j][k] = c * scale[i] * scale[j] / scale[k];
            }
        }
    }
    LieSuperAlgebra alg(std::move(basis), std::move(t));
    const auto check = validate(alg);
    if (!check.ok) {
        throw StructuralError("extracted structure constants are not a Lie superalgebra: " + check.failure);
    }
    return alg;
}

GroupAction translation_action(const SuperGroupChart &g, Side side)
{
    return GroupAction{g, g.shape, g.mul, side == Side::left};
}

SuperMorphism generalized_translation(const GroupAction &action)
{
    const auto &gs = action.group.shape;
    const auto &x = action.space;
    const auto src = x.with_parameters(gs.m, gs.n, gs.box);
    std::vector<SuperFunction> group_even, group_odd, space_even, space_odd;
    for (unsigned i = 0; i < gs.m; ++i) {
        group_even.push_back(ev(src, x.m + i));
    }
    for (unsigned j = 0; j < gs.n; ++j) {
        group_odd.push_back(od(src, x.n + j));
    }
    for (unsigned i = 0; i < x.m; ++i) {
        space_even.push_back(ev(src, i));
    }
    for (unsigned j = 0; j < x.n; ++j) {
        space_odd.push_back(od(src, j));
    }
    std::vector<SuperFunction> even, odd;
    auto append = [](std::vector<SuperFunction> &to, const std::vector<SuperFunction> &from) {
        to.insert(to.end(), from.begin(), from.end());
    };
    if (action.group_first) {
        append(even, group_even);
        append(even, space_even);
        append(odd, group_odd);
        append(odd, space_odd);
    } else {
        append(even, space_even);
        append(even, group_even);
        append(odd, space_odd);
        append(odd, group_odd);
    }
    const auto prod = action.group_first ? product_shape(gs, x) : product_shape(x, gs);
    const SuperMorphism embed(src, prod, std::move(even), std::move(odd));
    return compose(embed, action.act);
}

SuperFunction extend_to(const SuperFunction &f, const SuperDomainShape &shape)
{
    const auto &s = f.shape();
    if (s.m != shape.m || s.n != shape.n || s.params > shape.params || s.aux > shape.aux) {
        throw DimensionError("extend_to: incompatible shapes");
    }
    std::vector<unsigned> map(s.even_count());
    for (unsigned i = 0; i < s.even_count(); ++i) {
        map[i] = i;
    }
    SuperFunction r(shape);
    for (const auto &[mask, poly] : f.coeffs()) {
        r.add_term(mask, poly.remap(shape.even_count(), map));
    }
    return r;
}

namespace
{

struct TranslationData {
    SuperMorphism t;
    SuperFunction ber;
};

TranslationData translation_data(const GroupAction &action)
{
    auto t = generalized_translation(action);
    if (!preserves_orientation(t)) {
        throw DomainError("translation does not preserve orientation on the sample grid");
    }
    auto ber = berezinian(jacobian(t));
    return {std::move(t), std::move(ber)};
}

void enumerate_exponents(unsigned nvars, const DensityAnsatz &a, Exponents &cur, unsigned pos, int used,
                         std::vector<Exponents> &out)
{
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = a.min_exponent; e <= a.max_degree; ++e) {
        const int add = e > 0 ? e : 0;
        if (used + add > a.max_degree) {
            break;
        }
        cur[pos] = e;
        enumerate_exponents(nvars, a, cur, pos + 1, used + add, out);
    }
}

} // namespace

bool is_invariant(const GroupAction &action, const BerezinSection &omega)
{
    const auto data = translation_data(action);
    const auto moved = data.ber * pullback(data.t, omega.density());
    return moved == extend_to(omega.density(), data.t.source());
}

InvariantDensityResult solve_invariant_density(const GroupAction &action, const DensityAnsatz &ansatz)
{
    const auto &x = action.space;
    const auto data = translation_data(action);
    const auto &src = data.t.source();

    std::vector<Exponents> exps;
    Exponents cur(x.m, 0);
    enumerate_exponents(x.m, ansatz, cur, 0, 0, exps);
    std::vector<OddMask> masks;
    for (OddMask mk = 0; mk <= full_mask(x.n); ++mk) {
        masks.push_back(mk);
    }
    std::sort(masks.begin(), masks.end(), MonomialOrder{});

    std::vector<SuperFunction> unknowns;
    for (OddMask mk : masks) {
        for (const auto &e : exps) {
            unknowns.push_back(SuperFunction::monomial(x, mk, Polynomial::monomial(x.m, e)));
        }
    }
    // Column t: ber . T^*(b_t) - b_t, flattened over (odd monomial, exponent) keys.
    std::map<std::pair<OddMask, Exponents>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
    for (const auto &b : unknowns) {
        const auto diff = data.ber * pullback(data.t, b) - extend_to(b, src);
        std::vector<std::pair<std::size_t, Rational>> col;
        for (const auto &[mk, poly] : diff.coeffs()) {
            for (const auto &[e, c] : poly.terms()) {
                const auto it = rows.try_emplace({mk, e}, rows.size()).first;
                col.emplace_back(it->second, c);
            }
        }
        cols.push_back(std::move(col));
    }
    RationalMatrix sys(std::max<std::size_t>(rows.size(), 1), unknowns.size());
    for (std::size_t t = 0; t < cols.size(); ++t) {
        for (const auto &[r, c] : cols[t]) {
            sys(r, t) = c;
        }
    }
    const auto null = nullspace(std::move(sys));
    if (null.empty()) {
        throw InconclusiveError("no invariant density within the ansatz (max degree "
                                + std::to_string(ansatz.max_degree) + ", min exponent "
                                + std::to_string(ansatz.min_exponent) + ")");
    }
    InvariantDensityResult out;
    for (auto v : null) {
        Rational lead(0);
        for (const auto &c : v) {
            if (sgn(c) != 0) {
                lead = c;
                break;
            }
        }
        SuperFunction rho(x);
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (sgn(v[t]) != 0) {
                rho += unknowns[t] * (v[t] / lead);
            }
        }
        out.basis.emplace_back(std::move(rho));
    }
    return out;
}

InvariantDensityResult solve_invariant_density(const SuperGroupChart &g, Side side)
{
    return solve_invariant_density(translation_action(g, side), g.declared_ansatz);
}

bool embedding_is_homomorphism(const SuperGroupChart &g, const SubgroupSpec &h)
{
    const auto lhs = compose(product(h.embedding, h.embedding), g.mul);
    const auto rhs = compose(h.group.mul, h.embedding);
    return same_components(lhs, rhs);
}

SuperMorphism conjugation(const SuperGroupChart &g, const SubgroupSpec &h)
{
    const auto &hs = h.group.shape;
    const auto p1 = projection_first(hs, g.shape);
    const auto p2 = projection_second(hs, g.shape);
    const auto i1 = compose(p1, h.embedding);
    const auto inv1 = compose(i1, g.inv);
    const auto left = compose(pair(i1, p2), g.mul);
    return compose(pair(left, inv1), g.mul);
}

FunctionMatrix adjoint_matrix(const SuperGroupChart &g, const SubgroupSpec &h)
{
    const auto &hs = h.group.shape;
    const auto c = conjugation(g, h);
    std::vector<unsigned> evens, odds;
    for (unsigned i = 0; i < g.shape.m; ++i) {
        evens.push_back(hs.m + i);
    }
    for (unsigned j = 0; j < g.shape.n; ++j) {
        odds.push_back(hs.n + j);
    }
    const auto j = jacobian_wrt(c, evens, odds);
    const auto at_e = at_unit_second(hs, g);
    std::vector<SuperFunction> entries;
    for (const auto &e : j.entries()) {
        entries.push_back(pullback(at_e, e));
    }
    return FunctionMatrix(j.p(), j.q(), std::move(entries), SuperFunction(hs));
}

SuperFunction ModularBerezinians::ratio() const
{
    return ber_ad_h * inverse_even(ber_ad_u);
}

ModularBerezinians modular_berezinian(const SuperGroupChart &g, const SubgroupSpec &h)
{
    const SubgroupSpec self{h.group, SuperMorphism::identity(h.group.shape)};
    return {berezinian(adjoint_matrix(h.group, self)), berezinian(adjoint_matrix(g, h))};
}

QuotientChartData QuotientChartData::make(const SuperGroupChart &g, const SubgroupSpec &h, SuperMorphism section,
                                           BerezinSection omega_base)
{
    if (!(section.target() == g.shape)) {
        throw DimensionError("section must map into the group chart");
    }
    if (!(omega_base.shape() == section.source())) {
        throw DimensionError("base density must live on the section's domain");
    }
    auto base = section.source();
    auto tau = compose(product(section, h.embedding), g.mul);
    if (tau.source().m != g.shape.m || tau.source().n != g.shape.n) {
        throw StructuralError("U x H and G have different dimensions");
    }
    return {std::move(base), std::move(section), std::move(tau), std::move(omega_base)};
}

namespace
{

// c with a == c . b, when such a rational constant exists.
std::optional<Rational> constant_factor(const SuperFunction &a, const SuperFunction &b)
{
    if (b.is_zero()) {
        return std::nullopt;
    }
    const auto &[mk, poly] = *b.coeffs().begin();
    const auto &[e, c] = *poly.terms().begin();
    const Rational k = a.coefficient(mk).coefficient(e) / c;
    if (!(a == b * k)) {
        return std::nullopt;
    }
    return k;
}

int sign_power(unsigned long long e)
{
    return e % 2 == 0 ? 1 : -1;
}

} // namespace

FubiniReport fubini_check(const FubiniSetup &s)
{
    const auto omega_g = solve_invariant_density(s.group, Side::left).basis.front();
    const auto omega_h = solve_invariant_density(s.subgroup.group, Side::left).basis.front();
    const auto &tau = s.chart.trivialization;

    FubiniReport r;
    const auto pulled = pullback_section(tau, omega_g);
    const auto split = product_section(s.chart.omega_base, omega_h);
    r.normalized = pulled.density() == split.density();
    if (!r.normalized) {
        r.discrepancy = constant_factor(pulled.density(), split.density());
        throw NormalizationError("tau^* omega_G differs from omega_{G/H} (x) omega_H",
                                 r.discrepancy ? to_string(*r.discrepancy) : "non-constant");
    }

    r.lhs = integrate(omega_g.left_multiply(s.f), s.group_backend);
    const auto f_tau = pullback(tau, s.f);
    const auto f_h = fibre_integrate(f_tau, omega_h, s.chart.base, s.fibre_backend);
    const auto g_alg = group_lie_algebra(s.group);
    const auto h_alg = group_lie_algebra(s.subgroup.group);
    const unsigned quotient_dim = g_alg.dim() - h_alg.dim();
    r.sign = sign_power(static_cast<unsigned long long>(h_alg.odd_dim()) * quotient_dim);
    r.fibre_sign = sign_power(static_cast<unsigned long long>(s.chart.base.m + s.chart.base.n)
                              * s.subgroup.group.shape.n);
    const Scalar base_integral = integrate_base(f_h, s.chart.omega_base, s.base_backend);
    r.rhs = r.sign < 0 ? -base_integral : base_integral;
    r.pass = r.lhs == r.rhs && r.sign == r.fibre_sign;
    return r;
}

SuperMorphism product_map(const SuperGroupChart &g, const SubgroupSpec &m, const SubgroupSpec &h)
{
    return compose(product(m.embedding, h.embedding), g.mul);
}

ProductReport product_formula_check(const ProductSetup &s)
{
    const auto omega_u = solve_invariant_density(s.group, Side::left).basis.front();
    const auto omega_m = solve_invariant_density(s.m.group, Side::left).basis.front();
    const auto omega_h = solve_invariant_density(s.h.group, Side::left).basis.front();
    const auto mm = product_map(s.group, s.m, s.h);
    if (!preserves_orientation(mm)) {
        throw StructuralError("multiplication M x H -> U is not an oriented isomorphism on the chart");
    }
    ProductReport r;
    r.ratio = modular_berezinian(s.group, s.h).ratio();
    const auto &mh = mm.source();
    const auto split = product_section(omega_m, omega_h);
    const BerezinSection weighted(split.density() * lift_fibre(r.ratio, mh), split.basis_tag());
    const auto pulled = pullback_section(mm, omega_u);
    const auto k = constant_factor(pulled.density(), weighted.density());
    r.proportional = k.has_value();
    if (!k) {
        return r;
    }
    r.kappa = *k;
    r.lhs = integrate(omega_u.left_multiply(s.f), s.group_backend);
    const Scalar rhs = integrate(weighted.left_multiply(pullback(mm, s.f)), s.product_backend);
    r.rhs = rhs * Scalar(r.kappa);
    r.pass = r.lhs == r.rhs;
    return r;
}

// ---------------------------------------------------------------------------------------
// Built-in groups

SuperGroupChart translation_group(unsigned p, unsigned q)
{
    const auto s = SuperDomainShape::make(p, q);
    const auto s2 = product_shape(s, s);
    std::vector<SuperFunction> me, mo, ie, io;
    std::vector<std::string> names;
    for (unsigned i = 0; i < p; ++i) {
        me.push_back(ev(s2, i) + ev(s2, p + i));
        ie.push_back(-ev(s, i));
        names.push_back(p == 1 ? "X" : "X" + std::to_string(i + 1));
    }
    for (unsigned j = 0; j < q; ++j) {
        mo.push_back(od(s2, j) + od(s2, q + j));
        io.push_back(-od(s, j));
        names.push_back(q == 1 ? "Q" : "Q" + std::to_string(j + 1));
    }
    return SuperGroupChart{"R^" + std::to_string(p) + "|" + std::to_string(q),
                           s,
                           SuperMorphism(s2, s, std::move(me), std::move(mo)),
                           std::vector<Rational>(p, Rational(0)),
                           SuperMorphism(s, s, std::move(ie), std::move(io)),
                           std::move(names),
                           {},
                           {}};
}

SuperGroupChart super_heisenberg()
{
    const auto s = SuperDomainShape::make(1, 2);
    const auto s2 = product_shape(s, s);
    // (z, t1, t2)(z', t1', t2') = (z + z' + t1 t1' + t2 t2', t + t')
    SuperFunction z = ev(s2, 0) + ev(s2, 1) + od(s2, 0) * od(s2, 2) + od(s2, 1) * od(s2, 3);
    std::vector<SuperFunction> mo{od(s2, 0) + od(s2, 2), od(s2, 1) + od(s2, 3)};
    return SuperGroupChart{"heisenberg",
                           s,
                           SuperMorphism(s2, s, {z}, std::move(mo)),
                           {Rational(0)},
                           SuperMorphism(s, s, {-ev(s, 0)}, {-od(s, 0), -od(s, 1)}),
                           {"Z", "Q1", "Q2"},
                           {},
                           {}};
}

SuperGroupChart super_ax_plus_b()
{
    const auto s = SuperDomainShape::make(1, 1, {Interval::above(0)});
    const auto s2 = product_shape(s, s);
    // (a, b)(a', b') = (a a', b + a b')
    SuperFunction a = ev(s2, 0) * ev(s2, 1);
    SuperFunction b = od(s2, 0) + ev(s2, 0) * od(s2, 1);
    const SuperFunction a_inv = inverse_even(ev(s, 0));
    return SuperGroupChart{"ax+b",
                           s,
                           SuperMorphism(s2, s, {a}, {b}),
                           {Rational(1)},
                           SuperMorphism(s, s, {a_inv}, {-(a_inv * od(s, 0))}),
                           {"X", "Q"},
                           {4, -1},
                           {}};
}

SuperGroupChart multiplicative_group()
{
    const auto s = SuperDomainShape::make(1, 0, {Interval::above(0)});
    const auto s2 = product_shape(s, s);
    return SuperGroupChart{"R_>0",
                           s,
                           SuperMorphism(s2, s, {ev(s2, 0) * ev(s2, 1)}, {}),
                           {Rational(1)},
                           SuperMorphism(s, s, {inverse_even(ev(s, 0))}, {}),
                           {"X"},
                           {4, -1},
                           {}};
}

SuperGroupChart gl11_chart()
{
    // [[a, b], [c, d]] with coordinates (a, d | b, c)
    const auto s = SuperDomainShape::make(2, 2, {Interval::above(0), Interval::above(0)});
    const auto s2 = product_shape(s, s);
    const auto a = ev(s2, 0), d = ev(s2, 1), a2 = ev(s2, 2), d2 = ev(s2, 3);
    const auto b = od(s2, 0), c = od(s2, 1), b2 = od(s2, 2), c2 = od(s2, 3);
    std::vector<SuperFunction> me{a * a2 + b * c2, c * b2 + d * d2};
    std::vector<SuperFunction> mo{a * b2 + b * d2, c * a2 + d * c2};

    const FunctionMatrix x(1, 1, {ev(s, 0), od(s, 0), od(s, 1), ev(s, 1)}, SuperFunction(s));
    const auto xi = inverse(x);
    return SuperGroupChart{"GL(1|1)",
                           s,
                           SuperMorphism(s2, s, std::move(me), std::move(mo)),
                           {Rational(1), Rational(1)},
                           SuperMorphism(s, s, {xi(0, 0), xi(1, 1)}, {xi(0, 1), xi(1, 0)}),
                           {"E11", "E22", "E12", "E21"},
                           {},
                           // Left-invariant fields act by g.A up to a Koszul sign on the odd row, so
                           // the c-direction is -E21.
                           {Rational(1), Rational(1), Rational(1), Rational(-1)}};
}

SubgroupSpec r11_odd_factor()
{
    auto h = translation_group(0, 1);
    const auto g = translation_group(1, 1);
    SuperMorphism emb(h.shape, g.shape, {cst(h.shape, 0)}, {od(h.shape, 0)});
    return {std::move(h), std::move(emb)};
}

SubgroupSpec heisenberg_center()
{
    auto h = translation_group(1, 0);
    h.generator_names = {"Z"};
    const auto g = super_heisenberg();
    SuperMorphism emb(h.shape, g.shape, {ev(h.shape, 0)}, {SuperFunction(h.shape), SuperFunction(h.shape)});
    return {std::move(h), std::move(emb)};
}

SubgroupSpec ax_plus_b_even_subgroup()
{
    auto h = multiplicative_group();
    const auto g = super_ax_plus_b();
    SuperMorphism emb(h.shape, g.shape, {ev(h.shape, 0)}, {SuperFunction(h.shape)});
    return {std::move(h), std::move(emb)};
}

SubgroupSpec ax_plus_b_odd_subgroup()
{
    auto h = translation_group(0, 1);
    const auto g = super_ax_plus_b();
    SuperMorphism emb(h.shape, g.shape, {cst(h.shape, 1)}, {od(h.shape, 0)});
    return {std::move(h), std::move(emb)};
}

namespace
{

// (1 - x^2)^2 on variable i, vanishing to second order at -1 and 1.
Polynomial bump_sym(unsigned nvars, unsigned i)
{
    const auto x = Polynomial::variable(nvars, i);
    const auto one = Polynomial(nvars, Rational(1));
    const auto w = one - x * x;
    return w * w;
}

// (x - 1)^2 (2 - x)^2 on variable i
Polynomial bump_12(unsigned nvars, unsigned i)
{
    const auto x = Polynomial::variable(nvars, i);
    const auto one = Polynomial(nvars, Rational(1));
    const auto l = x - one;
    const auto r = one * Rational(2) - x;
    return l * l * r * r;
}

} // namespace

FubiniSetup fubini_r11()
{
    auto g = translation_group(1, 1);
    auto h = r11_odd_factor();
    const auto u = SuperDomainShape::make(1, 0);
    SuperMorphism t(u, g.shape, {ev(u, 0)}, {SuperFunction(u)});
    auto chart = QuotientChartData::make(g, h, std::move(t), BerezinSection(cst(u, 1)));
    // f = x^2 + (3 x^2 + 1) xi
    const auto &s = g.shape;
    const auto x = ev(s, 0);
    SuperFunction f = x * x + (x * x * Rational(3) + cst(s, 1)) * od(s, 0);
    const auto gauss = IntegrationBackend::gaussian();
    return FubiniSetup{"R^1|1 / odd factor", std::move(g), std::move(h), std::move(chart), std::move(f),
                       gauss, gauss, gauss};
}

FubiniSetup fubini_heisenberg()
{
    auto g = super_heisenberg();
    auto h = heisenberg_center();
    const auto u = SuperDomainShape::make(0, 2);
    // t(z1, z2) = (z1 z2, z1, z2)
    SuperMorphism t(u, g.shape, {od(u, 0) * od(u, 1)}, {od(u, 0), od(u, 1)});
    auto chart = QuotientChartData::make(g, h, std::move(t), BerezinSection(cst(u, 1)));
    const auto &s = g.shape;
    const auto z = ev(s, 0);
    const auto w = SuperFunction::from_polynomial(s, bump_sym(1, 0));
    const auto t12 = od(s, 0) * od(s, 1);
    SuperFunction f = w * (cst(s, 3) + t12 * z + t12) + w * z * od(s, 0);
    const auto box = IntegrationBackend::over_box({Interval::closed(-1, 1)});
    return FubiniSetup{"heisenberg / center", std::move(g), std::move(h), std::move(chart), std::move(f),
                       box, IntegrationBackend::over_box({}), box};
}

FubiniSetup fubini_ax_plus_b()
{
    auto g = super_ax_plus_b();
    auto h = ax_plus_b_odd_subgroup();
    const auto u = SuperDomainShape::make(1, 0, {Interval::above(0)});
    SuperMorphism t(u, g.shape, {ev(u, 0)}, {SuperFunction(u)});
    auto chart = QuotientChartData::make(g, h, std::move(t), BerezinSection(inverse_even(ev(u, 0))));
    const auto &s = g.shape;
    const auto a = ev(s, 0);
    const auto w = SuperFunction::from_polynomial(s, bump_12(1, 0));
    SuperFunction f = w * (a + (a * a + cst(s, 1)) * od(s, 0));
    const auto box = IntegrationBackend::over_box({Interval::closed(1, 2)});
    return FubiniSetup{"ax+b / odd subgroup", std::move(g), std::move(h), std::move(chart), std::move(f),
                       box, box, IntegrationBackend::over_box({})};
}

ProductSetup product_ax_plus_b(bool odd_first)
{
    auto g = super_ax_plus_b();
    auto odd = ax_plus_b_odd_subgroup();
    auto even = ax_plus_b_even_subgroup();
    const auto &s = g.shape;
    const auto a = ev(s, 0);
    const auto w = SuperFunction::from_polynomial(s, bump_12(1, 0));
    SuperFunction f = w * (cst(s, 1) + a + (a + cst(s, 3)) * od(s, 0));
    const auto box = IntegrationBackend::over_box({Interval::closed(1, 2)});
    if (odd_first) {
        return ProductSetup{"ax+b = odd . even", std::move(g), std::move(odd), std::move(even), std::move(f), box, box};
    }
    return ProductSetup{"ax+b = even . odd", std::move(g), std::move(even), std::move(odd), std::move(f), box, box};
}

std::vector<QuotientExample> quotient_examples()
{
    std::vector<QuotientExample> out;
    {
        // ax+b acting on the odd line: alpha -> b + a alpha
        auto g = super_ax_plus_b();
        const auto x = SuperDomainShape::make(0, 1);
        const auto p = product_shape(g.shape, x);
        SuperMorphism act(p, x, {}, {od(p, 0) + ev(p, 0) * od(p, 1)});
        out.push_back({"ax+b / even subgroup", GroupAction{std::move(g), x, std::move(act), true}, {{0}}, {}});
    }
    {
        // GL(1|1) on the odd projective line: z -> (c + d z)(a + b z)^-1
        auto g = gl11_chart();
        const auto x = SuperDomainShape::make(0, 1);
        const auto p = product_shape(g.shape, x);
        const auto a = ev(p, 0), d = ev(p, 1), b = od(p, 0), c = od(p, 1), z = od(p, 2);
        SuperMorphism act(p, x, {}, {(c + d * z) * inverse_even(a + b * z)});
        out.push_back({"GL(1|1) / Borel", GroupAction{std::move(g), x, std::move(act), true}, {{0, 1, 2}}, {}});
    }
    {
        auto g = translation_group(1, 1);
        const auto x = SuperDomainShape::make(1, 0);
        const auto p = product_shape(g.shape, x);
        SuperMorphism act(p, x, {ev(p, 0) + ev(p, 1)}, {});
        out.push_back({"R^1|1 / odd factor", GroupAction{std::move(g), x, std::move(act), true}, {{1}}, {}});
    }
    {
        auto g = super_ax_plus_b();
        const auto x = SuperDomainShape::make(1, 0, {Interval::above(0)});
        const auto p = product_shape(g.shape, x);
        SuperMorphism act(p, x, {ev(p, 0) * ev(p, 1)}, {});
        out.push_back({"ax+b / odd subgroup", GroupAction{std::move(g), x, std::move(act), true}, {{1}}, {4, -1}});
    }
    {
        auto g = super_heisenberg();
        const auto x = SuperDomainShape::make(0, 2);
        const auto p = product_shape(g.shape, x);
        SuperMorphism act(p, x, {}, {od(p, 0) + od(p, 2), od(p, 1) + od(p, 3)});
        out.push_back({"heisenberg / center", GroupAction{std::move(g), x, std::move(act), true}, {{0}}, {}});
    }
    return out;
}

} // namespace superint
