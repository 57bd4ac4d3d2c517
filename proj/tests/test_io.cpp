#include <doctest.h>

#include <string>

#include <superint/errors.hpp>
#include <superint/io.hpp>
#include <superint/verify.hpp>

#include "support.hpp"

using namespace superint;

namespace
{

// Line and column of a parse failure, or (0, 0) when parsing succeeds.
template <class F>
std::pair<std::size_t, std::size_t> failure_at(F &&parse)
{
    try {
        parse();
    } catch (const ParseError &e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

} // namespace

TEST_CASE("scalars and Grassmann elements")
{
    CHECK(parse_scalar("-3/2 s^2") == Scalar(Rational(-3, 2), 2));
    CHECK(parse_scalar("s") == Scalar(1, 1));
    CHECK(parse_scalar("4/6") == Scalar(Rational(2, 3)));
    CHECK(parse_grassmann("xi2 xi1") == parse_grassmann("-xi1 xi2"));
    CHECK(parse_grassmann("xi1 * xi1 + 2").str() == "2");
    CHECK(parse_grassmann("1", 3).generator_count() == 3);
    CHECK(parse_grassmann("xi3").generator_count() == 3);
    CHECK_THROWS_AS(parse_grassmann("xi4", 3), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);
}

TEST_CASE("polynomials")
{
    const auto p = parse_polynomial("3/2 x1^2 x2 - x1^-1 + 1", 2);
    CHECK(p.coefficient({2, 1}) == Rational(3, 2));
    CHECK(p.coefficient({-1, 0}) == -1);
    CHECK(parse_polynomial(p.str(), 2) == p);
    CHECK_THROWS_AS(parse_polynomial("x3", 2), ParseError);
}

TEST_CASE("round trips")
{
    RandomSource rng(41);
    for (int k = 0; k < 10; ++k) {
        const auto x = rng.even_invertible(2, 1, 3);
        CHECK(parse_supermatrix(format_supermatrix(x)) == x);

        const auto s = SuperDomainShape::make(2, 2, {Interval::closed(0, 1), Interval::above(Rational(-1, 2))}, 1);
        const auto f = rng.superfunction(s, 2);
        CHECK(parse_superfunction(format_superfunction(f)) == f);
    }
    for (auto g : {general_linear(1, 1), general_linear(2, 1)}) {
        CHECK(parse_lie_algebra(format_lie_algebra(g)) == g);
    }
}

TEST_CASE("intervals")
{
    CHECK(parse_interval("R") == Interval::all());
    CHECK(parse_interval("[0, 1]") == Interval::closed(0, 1));
    CHECK(parse_interval("(2, inf)") == Interval::above(2));
    const auto half = parse_interval("(-inf, 1/2]");
    CHECK_FALSE(half.lo);
    CHECK(*half.hi == Rational(1, 2));
    CHECK_THROWS_AS(parse_interval("[1, 0]"), ParseError);
}

TEST_CASE("parse errors report line and column")
{
    // entry (0, 1) must be odd
    CHECK(failure_at([] { parse_supermatrix("1 1 2\n1\n1\n0\n1\n"); }).first == 3);
    CHECK(failure_at([] { parse_supermatrix("# header\n1 1 0\n1\n0\n0\n"); }).first != 0);
    CHECK(failure_at([] { parse_supermatrix("1 1 0\n1\n0\n0\n1\n1\n"); }).first == 6);
    CHECK(failure_at([] { parse_supermatrix("1 1 0\n1\nxi1\n0\n1\n"); }).first == 3);
    const auto at = failure_at([] { parse_superfunction("1 1 0\nx1 : xi1\nx1 ^ : xi1\n"); });
    CHECK(at.first == 3);
    CHECK(at.second == 6);
    CHECK(failure_at([] { parse_lie_algebra("a:0 b:2\n"); }).first == 1);
    CHECK(failure_at([] { parse_lie_algebra("a:0 b:1\n0 1 -> 0 1\n0 1 -> 0 1\n"); }).first == 3);
    CHECK(failure_at([] { parse_lie_algebra("a:0 b:1\n0 2 -> 0 1\n"); }).first == 2);

    try {
        parse_scalar("1/0");
        FAIL("no error");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).rfind("line 1, column", 0) == 0);
    }
}

TEST_CASE("missing files")
{
    CHECK_THROWS_AS(read_text_file("/nonexistent/superint/file"), IoError);
    CHECK(parse_supermatrix(read_text_file(SUPERINT_TEST_DATA "/diag_6_3.txt")) == test::M(1, 1, 0, {"6", "0", "0", "3"}));
}
