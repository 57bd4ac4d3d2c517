#include <doctest.h>

#include <vector>

#include <superint/errors.hpp>
#include <superint/io.hpp>
#include <superint/superdomain.hpp>
#include <superint/verify.hpp>

#include "support.hpp"

using namespace superint;
using test::cst;
using test::ev;
using test::od;

namespace
{

SuperFunction F(const SuperDomainShape &s, const std::string &lines)
{
    std::string text = std::to_string(s.m) + " " + std::to_string(s.n) + " " + std::to_string(s.aux) + "\n" + lines;
    return parse_superfunction(text).reshaped(s);
}

// Unipotent-times-diagonal linear body, constant odd mixing, and a nilpotent shear.
SuperMorphism random_automorphism(RandomSource &rng, const SuperDomainShape &s)
{
    std::vector<SuperFunction> even, odd;
    const auto top = SuperFunction::monomial(s, full_mask(s.n), Polynomial(s.m, Rational(1)));
    for (unsigned i = 0; i < s.m; ++i) {
        auto c = ev(s, i) * Rational(rng.nonzero_rational(3));
        for (unsigned j = i + 1; j < s.m; ++j) {
            c += ev(s, j) * rng.rational(3);
        }
        c += SuperFunction(s, rng.rational(3));
        c += SuperFunction::from_polynomial(s, rng.polynomial(s.m, 2)) * top;
        even.push_back(c);
    }
    for (unsigned j = 0; j < s.n; ++j) {
        auto c = od(s, j) * Rational(rng.nonzero_rational(3));
        for (unsigned k = 0; k < j; ++k) {
            c += od(s, k) * rng.rational(3);
        }
        odd.push_back(c);
    }
    return SuperMorphism(s, s, even, odd);
}

} // namespace

TEST_CASE("superfunction products")
{
    const auto s = SuperDomainShape::make(1, 2);
    const auto x = ev(s, 0), xi1 = od(s, 0), xi2 = od(s, 1);
    CHECK(x * xi1 == F(s, "x1 : xi1"));
    CHECK((xi1 * xi1).is_zero());
    CHECK((x + xi1 * xi2) * (x - xi1 * xi2) == x * x);
    CHECK(xi2 * xi1 == -(xi1 * xi2));
}

TEST_CASE("derivatives")
{
    const auto s = SuperDomainShape::make(1, 2);
    CHECK(F(s, "x1^2 : xi1").derive_even(0) == F(s, "2 x1 : xi1"));
    CHECK(F(s, "1 : xi1 xi2").derive_odd(0) == F(s, "1 : xi2"));
    CHECK(F(s, "1 : xi1 xi2").derive_odd(1) == F(s, "-1 : xi1"));
}

TEST_CASE("graded Leibniz rule and anticommuting odd derivatives")
{
    RandomSource rng(21);
    const auto s = SuperDomainShape::make(2, 3);
    for (int k = 0; k < 20; ++k) {
        const auto f = rng.superfunction(s, 2), g = rng.superfunction(s, 2);
        const auto fe = f.even_part(), fo = f.odd_part();
        for (unsigned i = 0; i < s.m; ++i) {
            CHECK((f * g).derive_even(i) == f.derive_even(i) * g + f * g.derive_even(i));
        }
        for (unsigned j = 0; j < s.n; ++j) {
            CHECK((fe * g).derive_odd(j) == fe.derive_odd(j) * g + fe * g.derive_odd(j));
            CHECK((fo * g).derive_odd(j) == fo.derive_odd(j) * g - fo * g.derive_odd(j));
            for (unsigned l = 0; l < s.n; ++l) {
                CHECK(f.derive_odd(j).derive_odd(l) == -f.derive_odd(l).derive_odd(j));
            }
        }
    }
}

TEST_CASE("pullback examples")
{
    const auto s = SuperDomainShape::make(1, 2);
    const auto x = ev(s, 0), xi1 = od(s, 0), xi2 = od(s, 1);
    const SuperMorphism shear(s, s, {x + xi1 * xi2}, {xi1, xi2});
    CHECK(pullback(shear, x * x) == F(s, "x1^2 :\n2 x1 : xi1 xi2"));

    const auto f = F(s, "x1^3 - 1 :\n2 : xi2\nx1 : xi1 xi2");
    CHECK(pullback(SuperMorphism::identity(s), f) == f);

    const SuperMorphism swap(s, s, {x}, {xi2, xi1});
    CHECK(pullback(swap, xi1 * xi2) == -(xi1 * xi2));
}

TEST_CASE("pullback is a parity-preserving algebra morphism and functorial")
{
    RandomSource rng(22);
    const auto s = SuperDomainShape::make(2, 2);
    for (int k = 0; k < 10; ++k) {
        const auto phi = random_automorphism(rng, s), psi = random_automorphism(rng, s);
        const auto f = rng.superfunction(s, 2), g = rng.superfunction(s, 2);
        CHECK(pullback(phi, f * g) == pullback(phi, f) * pullback(phi, g));
        const auto odd_image = pullback(phi, f.odd_part());
        CHECK((odd_image.is_zero() || odd_image.parity() == Parity::odd));
        CHECK(pullback(compose(phi, psi), f) == pullback(phi, pullback(psi, f)));
    }
}

TEST_CASE("body image must stay in the target box")
{
    const auto unit = SuperDomainShape::make(1, 0, {Interval::closed(0, 1)});
    const SuperMorphism shift(unit, unit, {ev(unit, 0) + cst(unit, 2)}, {});
    CHECK_THROWS_AS(pullback(shift, ev(unit, 0)), DomainError);
    const SuperMorphism flip(unit, unit, {cst(unit, 1) - ev(unit, 0)}, {});
    CHECK(pullback(flip, ev(unit, 0)) == cst(unit, 1) - ev(unit, 0));
}

TEST_CASE("jacobian examples")
{
    const auto s = SuperDomainShape::make(1, 2);
    CHECK(jacobian(SuperMorphism::identity(s)) == FunctionMatrix::identity(1, 2, SuperFunction(s)));

    const auto t = SuperDomainShape::make(1, 1);
    const SuperMorphism scale(t, t, {ev(t, 0) * Rational(5)}, {od(t, 0)});
    const auto j = jacobian(scale);
    CHECK(j == FunctionMatrix(1, 1, {cst(t, 5), SuperFunction(t), SuperFunction(t), cst(t, 1)}, SuperFunction(t)));
    CHECK(berezinian(j) == cst(t, 5));

    const auto x = ev(s, 0), xi1 = od(s, 0), xi2 = od(s, 1);
    const SuperMorphism shear(s, s, {x + xi1 * xi2}, {xi1, xi2});
    // rows: d/dx, d/dxi1, d/dxi2; columns: x', xi1', xi2'
    const auto js = jacobian(shear);
    CHECK(js(1, 0) == xi2);
    CHECK(js(2, 0) == -xi1);
    CHECK(berezinian(js) == cst(s, 1));
}

TEST_CASE("compose and the chain rule for Ber")
{
    const auto s = SuperDomainShape::make(1, 0);
    const auto x = ev(s, 0);
    const SuperMorphism shift(s, s, {x + cst(s, 1)}, {}), dbl(s, s, {x * Rational(2)}, {});
    CHECK(compose(shift, dbl) == SuperMorphism(s, s, {x * Rational(2) + cst(s, 2)}, {}));
    CHECK(compose(shift, SuperMorphism::identity(s)) == shift);

    RandomSource rng(23);
    const auto t = SuperDomainShape::make(2, 2);
    for (int k = 0; k < 10; ++k) {
        const auto phi = random_automorphism(rng, t), psi = random_automorphism(rng, t);
        const auto lhs = berezinian(jacobian(compose(phi, psi)));
        CHECK(lhs == pullback(phi, berezinian(jacobian(psi))) * berezinian(jacobian(phi)));
    }
}

TEST_CASE("shape mismatches are rejected")
{
    const auto a = SuperDomainShape::make(1, 1), b = SuperDomainShape::make(1, 2);
    CHECK_THROWS_AS(ev(a, 0) * ev(b, 0), DimensionError);
    CHECK_THROWS_AS(ev(a, 0).derive_odd(3), DimensionError);
}
