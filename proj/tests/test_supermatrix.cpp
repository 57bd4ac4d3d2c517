#include <doctest.h>

#include <superint/errors.hpp>
#include <superint/supermatrix.hpp>
#include <superint/verify.hpp>

#include "support.hpp"

using namespace superint;
using test::G;
using test::M;

TEST_CASE("products of small supermatrices")
{
    const auto x = M(1, 1, 2, {"1", "xi1", "xi2", "1"});
    CHECK(GrassmannMatrix::identity(1, 1, GrassmannElement(2)) * x == x);
    CHECK(M(1, 1, 0, {"2", "0", "0", "3"}) * M(1, 1, 0, {"5", "0", "0", "7"}) == M(1, 1, 0, {"10", "0", "0", "21"}));

    const auto y = M(1, 1, 2, {"1", "-xi1", "-xi2", "1"});
    const auto xy = x * y;
    CHECK(xy == M(1, 1, 2, {"1 - xi1 xi2", "0", "0", "1 + xi1 xi2"}));
    // entrywise sums of products
    for (unsigned i = 0; i < 2; ++i) {
        for (unsigned j = 0; j < 2; ++j) {
            CHECK(xy(i, j) == x(i, 0) * y(0, j) + x(i, 1) * y(1, j));
        }
    }
}

TEST_CASE("parity layout is enforced")
{
    CHECK_THROWS_AS(M(1, 1, 2, {"1", "1", "0", "1"}), ParityError);
    CHECK_THROWS_AS(M(1, 1, 2, {"1", "xi1 + xi1 xi2", "0", "1"}), ParityError);
    CHECK_THROWS_AS(M(1, 1, 2, {"1", "0", "0"}), DimensionError);
    CHECK_THROWS_AS(M(1, 1, 2, {"1", "0", "0", "1"}) * M(2, 0, 2, {"1", "0", "0", "1"}), DimensionError);
}

TEST_CASE("supertrace")
{
    CHECK(supertrace(GrassmannMatrix::identity(1, 1, GrassmannElement(0))) == G("0", 0));
    CHECK(supertrace(M(1, 1, 0, {"3", "0", "0", "5"})) == G("-2", 0));
}

TEST_CASE("supertrace is graded cyclic")
{
    RandomSource rng(3);
    const unsigned n = 4;
    auto homogeneous = [&](unsigned p, unsigned q, Parity par) {
        std::vector<GrassmannElement> es;
        for (unsigned i = 0; i < p + q; ++i) {
            for (unsigned j = 0; j < p + q; ++j) {
                const Parity slot = par + parity_of(i >= p) + parity_of(j >= p);
                es.push_back(rng.grassmann(n, slot));
            }
        }
        return GrassmannMatrix(p, q, es, GrassmannElement(n), par);
    };
    for (int k = 0; k < 16; ++k) {
        const Parity px = k % 2 ? Parity::odd : Parity::even, py = (k / 2) % 2 ? Parity::odd : Parity::even;
        const auto x = homogeneous(2, 1, px), y = homogeneous(2, 1, py);
        CHECK(supertrace(x * y) == supertrace(y * x) * Scalar(koszul_sign(px, py)));
    }
}

TEST_CASE("berezinian examples")
{
    CHECK(berezinian(M(1, 1, 0, {"6", "0", "0", "3"})) == G("2", 0));
    CHECK(berezinian(GrassmannMatrix::identity(2, 2, GrassmannElement(3))) == G("1", 3));

    // [[a, beta], [gamma, d]]: Ber = a/d - beta gamma / d^2
    const auto a = G("2 + xi1 xi2", 4), d = G("3 - xi3 xi4 + xi1 xi4", 4);
    const auto beta = G("xi1 + 2 xi3", 4), gamma = G("xi2 - xi4 + xi1 xi2 xi3", 4);
    const GrassmannMatrix x(1, 1, {a, beta, gamma, d}, GrassmannElement(4));
    const auto dinv = inverse_even(d);
    CHECK(berezinian(x) == a * dinv - beta * gamma * dinv * dinv);

    // diag(A; D) with 2x2 blocks: det A / det D
    const auto blocks = M(2, 2, 0, {"1", "2", "0", "0", "3", "4", "0", "0", "0", "0", "5", "1", "0", "0", "2", "1"});
    CHECK(berezinian(blocks) == G("-2/3", 0));

    CHECK_THROWS_AS(berezinian(M(1, 1, 2, {"1", "xi1", "xi2", "xi1 xi2"})), SingularError);
}

TEST_CASE("berezinian is multiplicative")
{
    RandomSource rng(5);
    for (int k = 0; k < 20; ++k) {
        const unsigned p = 1 + k % 2, q = 1 + (k / 2) % 2;
        const auto x = rng.even_invertible(p, q, 4), y = rng.even_invertible(p, q, 4);
        CHECK(berezinian(x * y) == berezinian(x) * berezinian(y));
        CHECK(x * inverse(x) == GrassmannMatrix::identity(p, q, GrassmannElement(4)));
        CHECK(berezinian(inverse(x)) == inverse_even(berezinian(x)));
    }
}

TEST_CASE("homological picture of Ber(V)")
{
    struct Case {
        unsigned p, q;
        Parity parity;
    };
    for (const auto &c : {Case{1, 0, Parity::even}, Case{0, 1, Parity::odd}, Case{1, 1, Parity::odd},
                          Case{2, 1, Parity::odd}, Case{1, 2, Parity::even}, Case{2, 0, Parity::even}}) {
        CAPTURE(c.p);
        CAPTURE(c.q);
        const auto h = homological_berezinian(c.p, c.q, c.p + c.q + 2);
        CHECK(h.total_dim == 1);
        CHECK(h.parity == c.parity);
        CHECK(KoszulComplexSlice::build(c.p, c.q, c.p + c.q + 2).squares_to_zero());
    }
}

TEST_CASE("canonical pairing")
{
    CHECK(canonical_pairing({G("1", 0), 1, 1}, {G("1", 0), 1, 1}) == G("1", 0));
    CHECK(canonical_pairing({G("2", 0), 1, 1}, {G("3", 0), 1, 1}) == G("6", 0));
    CHECK_THROWS_AS(canonical_pairing({G("1", 0), 1, 1}, {G("1", 0), 2, 1}), DimensionError);

    RandomSource rng(9);
    for (int k = 0; k < 10; ++k) {
        const auto g = rng.even_invertible(2, 1, 3);
        const BerCoordinate primal{G("3 + xi1 xi2", 3), 2, 1}, dual{G("-1/2 + xi2 xi3", 3), 2, 1};
        const auto p2 = rebase_primal(primal, g);
        const auto d2 = rebase_dual(dual, g);
        // D(x') = Ber(g) D(x)
        CHECK(p2.value * berezinian(g) == primal.value);
        CHECK(canonical_pairing(d2, p2) == canonical_pairing(dual, primal));
    }
}
