#include <doctest.h>

#include <vector>

#include <superint/berezin.hpp>
#include <superint/errors.hpp>
#include <superint/io.hpp>
#include <superint/lie_super.hpp>
#include <superint/supergroup.hpp>
#include <superint/verify.hpp>

#include "support.hpp"

using namespace superint;
using test::cst;
using test::ev;
using test::od;

namespace
{

std::vector<SuperGroupChart> groups()
{
    return {translation_group(1, 1), translation_group(2, 2), super_heisenberg(), super_ax_plus_b(),
            multiplicative_group(), gl11_chart()};
}

// Density scaled so that its first coefficient is 1.
SuperFunction normalized(const BerezinSection &omega)
{
    const auto &d = omega.density();
    REQUIRE_FALSE(d.is_zero());
    const Rational lead = d.coeffs().begin()->second.terms().begin()->second;
    return d * Rational(1 / lead);
}

SuperFunction inverse_first(const SuperDomainShape &s)
{
    return SuperFunction::from_polynomial(s, Polynomial::monomial(s.even_count(), {-1}));
}

} // namespace

TEST_CASE("group laws of the built-in charts")
{
    for (const auto &g : groups()) {
        CAPTURE(g.name);
        CHECK(validate_group_laws(g).ok());
        CHECK(validate(group_lie_algebra(g)).ok);
    }
}

TEST_CASE("a broken multiplication fails associativity")
{
    auto g = translation_group(1, 0);
    const auto &src = g.mul.source();
    // (x, y) -> x + 2 y has unit problems and is not associative
    g.mul = SuperMorphism(src, g.shape, {ev(src, 0) + ev(src, 1) * Rational(2)}, {});
    const auto r = validate_group_laws(g);
    CHECK_FALSE(r.associative);
    CHECK_FALSE(r.ok());
}

TEST_CASE("Lie superalgebras of the charts")
{
    const auto r11 = group_lie_algebra(translation_group(1, 1));
    for (const auto &row : r11.table()) {
        for (const auto &v : row) {
            for (const auto &c : v) {
                CHECK(sgn(c) == 0);
            }
        }
    }

    // even X, odd Q with [X, Q] = Q
    const auto axb = group_lie_algebra(super_ax_plus_b());
    REQUIRE(axb.dim() == 2);
    CHECK(axb.basis()[0].parity == Parity::even);
    CHECK(axb.basis()[1].parity == Parity::odd);
    CHECK(axb.bracket_basis(0, 1) == LieVector{0, 1});
    CHECK(axb.bracket_basis(1, 0) == LieVector{0, -1});
    CHECK(axb.bracket_basis(0, 0) == LieVector{0, 0});
    CHECK(axb.bracket_basis(1, 1) == LieVector{0, 0});

    CHECK(group_lie_algebra(gl11_chart()) == general_linear(1, 1));
}

TEST_CASE("invariant densities")
{
    const auto r11 = translation_group(1, 1);
    for (Side side : {Side::left, Side::right}) {
        const auto sol = solve_invariant_density(r11, side);
        CHECK(sol.dimension() == 1);
        CHECK(normalized(sol.basis[0]) == cst(r11.shape, 1));
    }

    const auto axb = super_ax_plus_b();
    const auto left = solve_invariant_density(axb, Side::left);
    CHECK(left.dimension() == 1);
    CHECK(normalized(left.basis[0]) == cst(axb.shape, 1));

    const auto right = solve_invariant_density(axb, Side::right);
    CHECK(right.dimension() == 1);
    CHECK(normalized(right.basis[0]) == inverse_first(axb.shape));

    // direct checks of the invariance identity
    const auto right_action = translation_action(axb, Side::right);
    CHECK(is_invariant(right_action, BerezinSection(inverse_first(axb.shape))));
    CHECK_FALSE(is_invariant(right_action, BerezinSection(cst(axb.shape, 1))));
    CHECK(is_invariant(translation_action(axb, Side::left), BerezinSection(cst(axb.shape, 1))));

    // without the declared a^-1 factor there is no right-invariant density
    CHECK_THROWS_AS(solve_invariant_density(right_action, DensityAnsatz{4, 0}), InconclusiveError);

    for (const auto &g : groups()) {
        CAPTURE(g.name);
        CHECK(solve_invariant_density(g, Side::left).dimension() == 1);
    }
}

TEST_CASE("modular Berezinians")
{
    const auto r11 = translation_group(1, 1);
    const auto mb = modular_berezinian(r11, r11_odd_factor());
    CHECK(mb.ber_ad_h == cst(mb.ber_ad_h.shape(), 1));
    CHECK(mb.ber_ad_u == cst(mb.ber_ad_u.shape(), 1));

    const auto axb = super_ax_plus_b();
    const auto even = modular_berezinian(axb, ax_plus_b_even_subgroup());
    const auto &hs = even.ber_ad_u.shape();
    CHECK(even.ber_ad_h == cst(hs, 1));
    CHECK(even.ber_ad_u == inverse_first(hs));
    CHECK(even.ratio() == ev(hs, 0));
    CHECK(even.ratio() == ax_plus_b_ratio_oracle(true));

    const auto odd = modular_berezinian(axb, ax_plus_b_odd_subgroup());
    CHECK(odd.ratio() == cst(odd.ratio().shape(), 1));
    CHECK(odd.ratio() == ax_plus_b_ratio_oracle(false));
}

TEST_CASE("Ber(Ad) is multiplicative along the group")
{
    for (const auto &g : {super_ax_plus_b(), gl11_chart(), super_heisenberg(), multiplicative_group()}) {
        CAPTURE(g.name);
        const SubgroupSpec whole{g, SuperMorphism::identity(g.shape)};
        const auto ber = modular_berezinian(g, whole).ber_ad_u;
        const auto total = g.mul.source();
        const auto lhs = pullback(g.mul, ber);
        CHECK(lhs == lift_base(ber, total) * lift_fibre(ber, total));
    }
}

TEST_CASE("subgroup embeddings are homomorphisms")
{
    CHECK(embedding_is_homomorphism(translation_group(1, 1), r11_odd_factor()));
    CHECK(embedding_is_homomorphism(super_heisenberg(), heisenberg_center()));
    CHECK(embedding_is_homomorphism(super_ax_plus_b(), ax_plus_b_even_subgroup()));
    CHECK(embedding_is_homomorphism(super_ax_plus_b(), ax_plus_b_odd_subgroup()));
}

TEST_CASE("Fubini formula on the built-in quotients")
{
    struct Expect {
        FubiniSetup setup;
        int sign;
    };
    for (const auto &[setup, sign] : {Expect{fubini_r11(), -1}, Expect{fubini_heisenberg(), 1},
                                       Expect{fubini_ax_plus_b(), -1}}) {
        CAPTURE(setup.name);
        const auto r = fubini_check(setup);
        CHECK(r.normalized);
        CHECK(r.pass);
        CHECK(r.lhs == r.rhs);
        CHECK(r.sign == sign);
        CHECK(r.sign == r.fibre_sign);
    }
    // f = x^2 + (3 x^2 + 1) xi acting on D(x, xi) from the left: D(x, xi) (x^2 - (3 x^2 + 1) xi),
    // top coefficient integrates to -(3 s + s), times (-1)^{mn} = -1
    CHECK(fubini_check(fubini_r11()).lhs == Scalar(4, 1));
}

TEST_CASE("product of subgroups")
{
    for (bool odd_first : {true, false}) {
        CAPTURE(odd_first);
        const auto r = product_formula_check(product_ax_plus_b(odd_first));
        CHECK(r.proportional);
        CHECK(r.pass);
        CHECK(r.lhs == r.rhs);
        const auto &hs = r.ratio.shape();
        CHECK(r.ratio == (odd_first ? ev(hs, 0) : cst(hs, 1)));
    }
}
