#include <doctest.h>

#include <map>
#include <vector>

#include <superint/errors.hpp>
#include <superint/verify.hpp>

#include "support.hpp"

using namespace superint;
using test::G;

namespace
{

// Naive model: words of generator indices, sorted by adjacent swaps.
using Word = std::vector<unsigned>;
using Naive = std::map<Word, Rational>;

Naive to_naive(const GrassmannElement &a)
{
    Naive out;
    for (const auto &[m, c] : a.terms()) {
        out[mask_indices(m)] = c.rational();
    }
    return out;
}

Naive naive_mul(const Naive &a, const Naive &b)
{
    Naive out;
    for (const auto &[wa, ca] : a) {
        for (const auto &[wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            int sign = 1;
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
                    if (w[j] > w[j + 1]) {
                        std::swap(w[j], w[j + 1]);
                        sign = -sign;
                    }
                }
            }
            bool dead = false;
            for (std::size_t j = 0; j + 1 < w.size(); ++j) {
                dead = dead || w[j] == w[j + 1];
            }
            if (!dead) {
                out[w] += sign * ca * cb;
            }
        }
    }
    std::erase_if(out, [](const auto &kv) { return sgn(kv.second) == 0; });
    return out;
}

} // namespace

TEST_CASE("anticommuting generators")
{
    const auto x1 = GrassmannElement::generator(2, 0), x2 = GrassmannElement::generator(2, 1);
    CHECK(x1 * x2 == G("xi1 xi2", 2));
    CHECK(x2 * x1 == G("-xi1 xi2", 2));
    CHECK((x1 * x1).is_zero());
}

TEST_CASE("product of (1 + xi1)(1 + xi2) against the word model")
{
    const auto a = G("1 + xi1", 2), b = G("1 + xi2", 2);
    const auto p = a * b;
    CHECK(p == G("1 + xi1 + xi2 + xi1 xi2", 2));
    CHECK(to_naive(p) == naive_mul(to_naive(a), to_naive(b)));
}

TEST_CASE("random products agree with the word model")
{
    RandomSource rng(7);
    for (int k = 0; k < 50; ++k) {
        const auto a = rng.grassmann(5, Parity::even) + rng.grassmann(5, Parity::odd);
        const auto b = rng.grassmann(5, Parity::even) + rng.grassmann(5, Parity::odd);
        CHECK(to_naive(a * b) == naive_mul(to_naive(a), to_naive(b)));
    }
}

TEST_CASE("even inverse")
{
    CHECK(inverse_even(G("1 + xi1 xi2", 2)) == G("1 - xi1 xi2", 2));
    CHECK(inverse_even(G("2", 0)) == G("1/2", 0));
    const auto a = G("3 + 6 xi1 xi2 + xi1 xi2 xi3 xi4", 4);
    const auto inv = inverse_even(a);
    CHECK(a * inv == G("1", 4));
    // (1/3)(1 - u) with u = 2 xi1 xi2 + xi1 xi2 xi3 xi4 / 3, u^2 = 0
    CHECK(inv == G("1/3 - 2/3 xi1 xi2 - 1/9 xi1 xi2 xi3 xi4", 4));
    CHECK_THROWS_AS(inverse_even(G("xi1 xi2", 2)), SingularError);
    CHECK_THROWS_AS(inverse_even(G("1 + xi1", 2)), ParityError);
}

TEST_CASE("body and soul")
{
    const auto a = G("5 + xi1", 1);
    CHECK(a.body() == Scalar(5));
    CHECK(a.soul() == G("xi1", 1));
    CHECK(G("xi1 xi2", 2).body().is_zero());
    CHECK(a.body().rational() == 5);
}

TEST_CASE("algebra properties on random elements")
{
    RandomSource rng(11);
    const unsigned n = 5;
    for (int k = 0; k < 40; ++k) {
        const auto a = rng.grassmann(n, Parity::even) + rng.grassmann(n, Parity::odd);
        const auto b = rng.grassmann(n, Parity::even) + rng.grassmann(n, Parity::odd);
        const auto c = rng.grassmann(n, Parity::even) + rng.grassmann(n, Parity::odd);
        CHECK((a * b) * c == a * (b * c));

        const Parity pa = k % 2 ? Parity::odd : Parity::even, pb = k % 3 ? Parity::odd : Parity::even;
        const auto ha = rng.grassmann(n, pa), hb = rng.grassmann(n, pb);
        CHECK(ha * hb == hb * ha * Scalar(koszul_sign(pa, pb)));

        auto e = rng.grassmann(n, Parity::even);
        if (e.body().is_zero()) {
            e += G("1", n);
        }
        CHECK(e * inverse_even(e) == G("1", n));
        CHECK(pow(a.soul(), n + 1).is_zero());
    }
}

TEST_CASE("generator counts and scalar exponents are not mixed")
{
    CHECK_THROWS_AS(G("xi1", 1) * G("xi1", 2), DimensionError);
    CHECK(G("xi1", 1).pad(3, 2) == G("xi3", 3));
    CHECK_THROWS_AS(Scalar(1, 1) + Scalar(1, 0), ExponentMismatchError);
    CHECK(Scalar(2, 1) * Scalar(3, 2) == Scalar(6, 3));
    CHECK(Scalar(Rational(2, 4)) == Scalar(Rational(1, 2)));
}
