#include <doctest.h>

#include <vector>

#include <superint/berezin.hpp>
#include <superint/errors.hpp>
#include <superint/io.hpp>

#include "support.hpp"

using namespace superint;
using test::cst;
using test::ev;
using test::od;

namespace
{

BerezinSection section(const std::string &text)
{
    return BerezinSection(parse_superfunction(text));
}

const auto gaussian = IntegrationBackend::gaussian();

} // namespace

TEST_CASE("Berezin integral examples")
{
    // pure odd: D(xi) (a + b xi) -> b
    CHECK(integrate(section("0 1 0\n7 :\n-3/2 : xi1"), gaussian) == Scalar(Rational(-3, 2)));
    // second gaussian moment is s, the sign is (-1)^{mn} = -1
    CHECK(integrate(section("1 1 0\nx1^2 : xi1"), gaussian) == Scalar(-1, 1));
    CHECK(integrate(section("1 0 0\nbox [0, 1]\nx1 :"), IntegrationBackend::over_box({Interval::closed(0, 1)}))
          == Scalar(Rational(1, 2)));
    CHECK(integrate(section("2 0 0\nx1^2 x2^4 + 1 :"), gaussian) == Scalar(4, 2));
    // no top coefficient
    CHECK(integrate(section("1 2 0\nx1 : xi1\n5 :"), gaussian).is_zero());
}

TEST_CASE("auxiliary generators ride along")
{
    const auto omega = section("1 1 2\nx1^2 : xi1 xi2\n3 : xi1 xi2 xi3\n1 : xi2");
    CHECK(integrate_graded(omega, gaussian) == parse_grassmann("-1 s xi1 - 3 s xi1 xi2", 2));
    CHECK_THROWS_AS(integrate(omega, gaussian), DimensionError);
}

TEST_CASE("backend must match the domain")
{
    const auto half_line = section("1 0 0\nbox (0, inf)\nx1 :");
    CHECK_THROWS_AS(integrate(half_line, gaussian), DomainError);
    CHECK_THROWS_AS(integrate(half_line, IntegrationBackend::over_box({Interval::closed(-1, 1)})), DomainError);
    CHECK(integrate(half_line, IntegrationBackend::over_box({Interval::closed(1, 3)})) == Scalar(4));
}

TEST_CASE("pullback of sections")
{
    const auto omega = section("1 2 0\nx1^2 + 1 : xi1 xi2\nx1 : xi2");
    const auto id = SuperMorphism::identity(omega.shape());
    CHECK(pullback_section(id, omega) == omega);

    const auto src = SuperDomainShape::make(1, 0, {Interval::closed(0, 1)});
    const auto tgt = SuperDomainShape::make(1, 0, {Interval::closed(0, 2)});
    const SuperMorphism dbl(src, tgt, {ev(src, 0) * Rational(2)}, {});
    CHECK(pullback_section(dbl, BerezinSection(cst(tgt, 1))).density() == cst(src, 2));

    const auto &s = omega.shape();
    const SuperMorphism shear(s, s, {ev(s, 0) + od(s, 0) * od(s, 1)}, {od(s, 0), od(s, 1)});
    const auto pulled = pullback_section(shear, omega);
    CHECK(integrate(pulled, gaussian) == integrate(omega, gaussian));
    CHECK(integrate(omega, gaussian) == Scalar(2, 1));

    const SuperMorphism reflect(src, src, {cst(src, 1) - ev(src, 0)}, {});
    CHECK_THROWS_AS(pullback_section(reflect, BerezinSection(cst(src, 1))), DomainError);
}

TEST_CASE("odd linear change of variables")
{
    // xi -> 2 xi: Ber of the jacobian is 1/2 and the pulled-back density is 2 xi.
    const auto omega = section("0 1 0\n1 : xi1");
    const auto &s = omega.shape();
    const SuperMorphism phi(s, s, {}, {od(s, 0) * Rational(2)});
    CHECK(pullback_section(phi, omega).density() == od(s, 0));
    CHECK(integrate(pullback_section(phi, omega), gaussian) == Scalar(1));
}

TEST_CASE("fibre integration")
{
    const auto base = SuperDomainShape::make(1, 0);
    const auto fibre = section("0 1 0\n1 : xi1");
    const auto total = product_shape(base, fibre.shape());
    const auto fi = fibre_integrate(SuperFunction(total, Rational(1)), fibre, base, gaussian);
    CHECK(fi.value == cst(base, 1));
    CHECK(fi.gauss_exponent == 0);

    // h (x) omega2 with integral 2 s
    const auto h = ev(base, 0) * ev(base, 0) - cst(base, 3);
    const std::vector<ProductTerm> terms{{h, section("1 0 0\nx1^2 + 1 :"), {}, {}}};
    const auto fh = fibre_integrate(terms, base, gaussian);
    CHECK(fh.value == h * Rational(2));
    CHECK(fh.gauss_exponent == 1);
}

TEST_CASE("product sections")
{
    // n = 1 on the base, p = 1 on the fibre
    const auto b = section("0 1 0\n1 :"), f = section("1 0 0\n1 :");
    const auto prod = product_section(b, f);
    CHECK(prod.density() == cst(prod.shape(), -1));

    const auto plain = product_section(section("1 0 0\nx1 :"), section("1 1 0\n1 : xi1"));
    CHECK(plain.density() == ev(plain.shape(), 0) * od(plain.shape(), 0));

    // (m, n, p, q) = (1, 1, 1, 1): integral of the product = (+1) * (-s) * (-2 s)
    const auto w1 = section("1 1 0\nx1^2 : xi1"), w2 = section("1 1 0\nx1^2 + 1 : xi1");
    CHECK(integrate(w1, gaussian) == Scalar(-1, 1));
    CHECK(integrate(w2, gaussian) == Scalar(-2, 1));
    CHECK(integrate(product_section(w1, w2), gaussian) == Scalar(2, 2));
    CHECK(integrate(product_section(w1, w2), gaussian) == integrate(w1, gaussian) * integrate(w2, gaussian));
}

TEST_CASE("integration is linear")
{
    const auto a = section("1 1 0\nx1^2 : xi1\n4 :"), b = section("1 1 0\n3 x1^4 - 1 : xi1");
    CHECK(integrate(a + b * Rational(2), gaussian) == integrate(a, gaussian) + integrate(b, gaussian) * Scalar(2));
}
