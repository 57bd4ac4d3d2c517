#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include <superint/errors.hpp>
#include <superint/io.hpp>
#include <superint/lie_super.hpp>
#include <superint/verify.hpp>

#include "support.hpp"

using namespace superint;

namespace
{

using Dense = std::vector<std::vector<Rational>>;

// Elementary matrix E_ij of size p+q, as plain rationals.
Dense elementary(unsigned size, unsigned i, unsigned j)
{
    Dense m(size, std::vector<Rational>(size));
    m[i][j] = 1;
    return m;
}

Dense mul(const Dense &a, const Dense &b)
{
    const auto n = a.size();
    Dense c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

// [E_ij, E_kl] of gl(p|q) from matrix products, read off in the algebra's own basis by name.
LieVector commutator_oracle(const LieSuperAlgebra &g, unsigned p, unsigned q, unsigned a, unsigned b)
{
    auto indices = [&](unsigned e) {
        const auto &n = g.basis()[e].name;
        return std::pair<unsigned, unsigned>(n[1] - '1', n[2] - '1');
    };
    const unsigned size = p + q;
    const auto [i, j] = indices(a);
    const auto [k, l] = indices(b);
    const int sign = koszul_sign(g.basis()[a].parity, g.basis()[b].parity);
    const auto x = mul(elementary(size, i, j), elementary(size, k, l));
    const auto y = mul(elementary(size, k, l), elementary(size, i, j));
    LieVector out(g.dim());
    for (unsigned r = 0; r < size; ++r) {
        for (unsigned c = 0; c < size; ++c) {
            const Rational v = x[r][c] - sign * y[r][c];
            if (sgn(v) != 0) {
                const std::string name = "E" + std::to_string(r + 1) + std::to_string(c + 1);
                out[*g.index_of(name)] = v;
            }
        }
    }
    return out;
}

LieVector random_homogeneous(RandomSource &rng, const LieSuperAlgebra &g, Parity p)
{
    LieVector v(g.dim());
    for (unsigned i = 0; i < g.dim(); ++i) {
        if (g.basis()[i].parity == p) {
            v[i] = rng.rational(3);
        }
    }
    return v;
}

ScalarSuperMatrix graded_commutator(const ScalarSuperMatrix &a, const ScalarSuperMatrix &b)
{
    const auto ab = a * b, ba = b * a;
    return koszul_sign(a.parity(), b.parity()) == 1 ? ab - ba : ab + ba;
}

} // namespace

TEST_CASE("gl(p|q) structure constants match matrix commutators")
{
    for (auto [p, q] : {std::pair{1u, 1u}, std::pair{2u, 1u}, std::pair{1u, 2u}}) {
        const auto g = general_linear(p, q);
        CHECK(validate(g).ok);
        for (unsigned a = 0; a < g.dim(); ++a) {
            for (unsigned b = 0; b < g.dim(); ++b) {
                CHECK(g.bracket_basis(a, b) == commutator_oracle(g, p, q, a, b));
            }
        }
    }
}

TEST_CASE("validation")
{
    CHECK(validate(abelian_algebra({{"a", Parity::even}, {"b", Parity::odd}, {"c", Parity::odd}})).ok);

    const auto g = general_linear(1, 1);
    const unsigned e11 = *g.index_of("E11"), e12 = *g.index_of("E12");
    auto table = g.table();
    table[e11][e12][e12] = 2;
    const auto bad = validate(LieSuperAlgebra(g.basis(), table));
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure.rfind("antisymmetry", 0) == 0);

    auto table2 = g.table();
    table2[e11][e12][e11] = 1;
    table2[e12][e11][e11] = -1;
    CHECK(validate(LieSuperAlgebra(g.basis(), table2)).failure.rfind("parity", 0) == 0);
}

TEST_CASE("the gl(1|1) data file is gl(1|1)")
{
    const auto g = parse_lie_algebra(read_text_file(SUPERINT_TEST_DATA "/gl11.lsa"));
    CHECK(validate(g).ok);
    CHECK(g == general_linear(1, 1));
}

TEST_CASE("adjoint matrices")
{
    const auto ab = abelian_algebra({{"a", Parity::even}, {"b", Parity::odd}});
    CHECK(ad(ab, ab.unit_vector(0)) == ScalarSuperMatrix::zero(1, 1, GrassmannElement(0)));

    const auto g = general_linear(1, 1);
    // graded order E11, E22 | E12, E21
    const auto x = ad(g, g.unit_vector(*g.index_of("E11")));
    CHECK(x == test::M(2, 2, 0, {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "-1"}));
    CHECK(scalar_supertrace(x) == 0);
}

TEST_CASE("ad is a representation and supertraces of brackets vanish")
{
    RandomSource rng(31);
    const auto g = general_linear(2, 1);
    for (int k = 0; k < 12; ++k) {
        const Parity px = k % 2 ? Parity::odd : Parity::even, py = (k / 2) % 2 ? Parity::odd : Parity::even;
        const auto x = random_homogeneous(rng, g, px), y = random_homogeneous(rng, g, py);
        const auto xy = g.bracket(x, y);
        CHECK(ad(g, xy) == graded_commutator(ad(g, x), ad(g, y)));
        CHECK(scalar_supertrace(ad(g, xy)) == 0);
    }
}

TEST_CASE("unimodularity verdicts")
{
    const auto ab = abelian_algebra({{"a", Parity::even}, {"b", Parity::odd}, {"c", Parity::even}});
    CHECK(unimodularity_check(ab, {{0}}).unimodular);
    CHECK(unimodularity_check(ab, {{0, 1}}).unimodular);

    const auto g = general_linear(1, 1);
    const auto zero = unimodularity_check(g, {{}});
    CHECK(zero.unimodular);
    CHECK(zero.str(g) == "UNIMODULAR");

    const SubalgebraSpec borel{{*g.index_of("E11"), *g.index_of("E22"), *g.index_of("E12")}};
    const auto v = unimodularity_check(g, borel);
    CHECK_FALSE(v.unimodular);
    CHECK(v.str(g) == "NOT_UNIMODULAR witness=E11 str=1");
    CHECK(v.connected_group_criterion);
    CHECK(quotient_action(g, borel, g.unit_vector(*g.index_of("E11"))) == test::M(0, 1, 0, {"-1"}));

    CHECK(quotient_action(g, {{0, 1, 2, 3}}, g.unit_vector(0)).size() == 0);
    CHECK_THROWS_AS(unimodularity_check(g, {{*g.index_of("E12"), *g.index_of("E21")}}), StructuralError);
}

TEST_CASE("quotient action is a representation of h")
{
    RandomSource rng(32);
    const auto g = general_linear(2, 1);
    SubalgebraSpec h;
    for (const char *n : {"E11", "E12", "E13", "E22", "E23", "E33"}) {
        h.span.push_back(*g.index_of(n));
    }
    auto in_h = [&](Parity p) {
        auto v = random_homogeneous(rng, g, p);
        for (unsigned i = 0; i < g.dim(); ++i) {
            if (std::find(h.span.begin(), h.span.end(), i) == h.span.end()) {
                v[i] = 0;
            }
        }
        return v;
    };
    for (int k = 0; k < 8; ++k) {
        const Parity px = k % 2 ? Parity::odd : Parity::even, py = (k / 2) % 2 ? Parity::odd : Parity::even;
        const auto x = in_h(px), y = in_h(py);
        CHECK(quotient_action(g, h, g.bracket(x, y))
              == graded_commutator(quotient_action(g, h, x), quotient_action(g, h, y)));
    }
}

TEST_CASE("verdict does not depend on the adapted basis")
{
    RandomSource rng(33);
    const auto g = general_linear(1, 1);
    for (int k = 0; k < 6; ++k) {
        // random basis of the Borel subalgebra: two even vectors in span{E11, E22} and a multiple of E12
        LieVector u(4), w(4), z(4);
        u[0] = rng.nonzero_rational(3);
        u[1] = rng.rational(3);
        w[0] = rng.rational(3);
        w[1] = rng.nonzero_rational(3);
        if (u[0] * w[1] == u[1] * w[0]) {
            w[1] += 1;
        }
        z[2] = rng.nonzero_rational(3);
        const auto adapted = adapt_basis(g, {u, w, z});
        CHECK(validate(adapted.algebra).ok);
        const auto v = unimodularity_check(adapted.algebra, adapted.h);
        CHECK_FALSE(v.unimodular);
    }
}
