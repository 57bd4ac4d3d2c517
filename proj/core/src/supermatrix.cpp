#include <superint/polynomial.hpp>
#include <superint/supermatrix.hpp>

#include <map>

namespace superint
{

GrassmannMatrix to_grassmann_matrix(const RationalMatrix &m, unsigned p, unsigned q, unsigned generator_count,
                                    Parity parity)
{
    const unsigned n = p + q;
    if (m.rows() != n || m.cols() != n) {
        throw DimensionError("rational matrix does not match (p|q)");
    }
    const GrassmannElement zero(generator_count);
    std::vector<GrassmannElement> entries;
    entries.reserve(n * n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            entries.emplace_back(generator_count, Scalar(m(i, j)));
        }
    }
    return GrassmannMatrix(p, q, std::move(entries), zero, parity);
}

// ---------------------------------------------------------------------------------------
// Koszul complex. Generators: for each basis index i of V there is one odd variable o_i
// and one even variable u_i; for i < p (even basis vector) o_i = Pi(e_i) and u_i = e^i,
// for i >= p (odd basis vector) o_i = e^i and u_i = Pi(e_i). Pi = sum_i o_i u_i.

namespace
{

struct KoszulMonomial {
    Exponents even;
    OddMask odd = 0;
    bool operator<(const KoszulMonomial &o) const
    {
        return odd != o.odd ? odd < o.odd : even < o.even;
    }
};

void enumerate_even(unsigned nvars, int degree, Exponents &cur, unsigned pos, std::vector<Exponents> &out)
{
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int k = degree; k >= 0; --k) {
        cur[pos] = k;
        enumerate_even(nvars, degree - k, cur, pos + 1, out);
    }
}

std::vector<KoszulMonomial> koszul_basis(unsigned nvars, unsigned k)
{
    std::vector<KoszulMonomial> out;
    for (OddMask mask = 0; mask <= full_mask(nvars); ++mask) {
        const unsigned s = degree(mask);
        if (s > k) {
            continue;
        }
        std::vector<Exponents> evens;
        Exponents cur(nvars, 0);
        enumerate_even(nvars, static_cast<int>(k - s), cur, 0, evens);
        for (auto &e : evens) {
            out.push_back({std::move(e), mask});
        }
    }
    return out;
}

} // namespace

KoszulComplexSlice KoszulComplexSlice::build(unsigned p, unsigned q, unsigned degree_cap)
{
    const unsigned nvars = p + q;
    if (nvars == 0) {
        throw DimensionError("homological Berezinian needs p + q >= 1");
    }
    if (nvars > 16) {
        throw DimensionError("Koszul slice limited to p + q <= 16");
    }
    KoszulComplexSlice slice;
    slice.p = p;
    slice.q = q;
    slice.degree_cap = degree_cap;
    std::vector<std::vector<KoszulMonomial>> bases;
    std::vector<std::map<KoszulMonomial, std::size_t>> index;
    for (unsigned k = 0; k <= degree_cap; ++k) {
        bases.push_back(koszul_basis(nvars, k));
        std::map<KoszulMonomial, std::size_t> idx;
        std::vector<Parity> par;
        for (std::size_t i = 0; i < bases.back().size(); ++i) {
            idx.emplace(bases.back()[i], i);
            par.push_back(mask_parity(bases.back()[i].odd));
        }
        index.push_back(std::move(idx));
        slice.basis_parity.push_back(std::move(par));
    }
    for (unsigned k = 0; k + 2 <= degree_cap; ++k) {
        RationalMatrix d(bases[k + 2].size(), bases[k].size());
        for (std::size_t col = 0; col < bases[k].size(); ++col) {
            const auto &mono = bases[k][col];
            for (unsigned i = 0; i < nvars; ++i) {
                // o_i u_i * mono: u_i is even and commutes; o_i is sorted into the odd part.
                const int sign = merge_sign(OddMask{1} << i, mono.odd);
                if (sign == 0) {
                    continue;
                }
                KoszulMonomial target{mono.even, mono.odd | (OddMask{1} << i)};
                ++target.even[i];
                d(index[k + 2].at(target), col) += sign;
            }
        }
        slice.differential.push_back(std::move(d));
    }
    return slice;
}

bool KoszulComplexSlice::squares_to_zero() const
{
    for (std::size_t k = 0; k + 2 < differential.size(); ++k) {
        const auto dd = differential[k + 2] * differential[k];
        for (std::size_t i = 0; i < dd.rows(); ++i) {
            for (std::size_t j = 0; j < dd.cols(); ++j) {
                if (sgn(dd(i, j)) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace
{

// Rank of the restriction of d to source columns of parity `src`.
std::size_t restricted_rank(const RationalMatrix &d, const std::vector<Parity> &src_parity, Parity src)
{
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < src_parity.size(); ++j) {
        if (src_parity[j] == src) {
            cols.push_back(j);
        }
    }
    RationalMatrix sub(d.rows(), cols.size());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            sub(i, j) = d(i, cols[j]);
        }
    }
    return rank(std::move(sub));
}

} // namespace

std::pair<std::size_t, std::size_t> KoszulComplexSlice::homology(unsigned k) const
{
    if (k + 2 > degree_cap) {
        throw InconclusiveError("homology at degree " + std::to_string(k) + " needs degree_cap >= k + 2");
    }
    std::size_t dims[2] = {0, 0};
    for (Parity par : {Parity::even, Parity::odd}) {
        std::size_t count = 0;
        for (Parity b : basis_parity[k]) {
            count += (b == par);
        }
        const std::size_t ker = count - restricted_rank(differential[k], basis_parity[k], par);
        const std::size_t im
            = k >= 2 ? restricted_rank(differential[k - 2], basis_parity[k - 2], par + Parity::odd) : 0;
        dims[to_int(par)] = ker - im;
    }
    return {dims[0], dims[1]};
}

HomologicalBerezinian homological_berezinian(unsigned p, unsigned q, unsigned degree_cap)
{
    if (degree_cap < p + q + 2) {
        throw InconclusiveError("degree_cap must be at least p + q + 2");
    }
    auto run = [&](unsigned cap) {
        const auto slice = KoszulComplexSlice::build(p, q, cap);
        std::size_t even = 0, odd = 0;
        for (unsigned k = 0; k + 2 <= cap; ++k) {
            const auto [e, o] = slice.homology(k);
            even += e;
            odd += o;
        }
        return std::pair{even, odd};
    };
    const auto first = run(degree_cap);
    const auto second = run(degree_cap + 1);
    if (first != second) {
        throw InconclusiveError("homology not stable between degree caps " + std::to_string(degree_cap) + " and "
                                + std::to_string(degree_cap + 1));
    }
    HomologicalBerezinian out;
    out.even_dim = first.first;
    out.odd_dim = first.second;
    out.total_dim = out.even_dim + out.odd_dim;
    // The homology computes Pi^p Ber(V); undo the parity shift.
    const Parity homology_parity = out.odd_dim > 0 && out.even_dim == 0 ? Parity::odd : Parity::even;
    out.parity = homology_parity + parity_of(p);
    return out;
}

// ---------------------------------------------------------------------------------------

GrassmannElement canonical_pairing(const BerCoordinate &dual, const BerCoordinate &primal)
{
    if (dual.p != primal.p || dual.q != primal.q) {
        throw DimensionError("canonical pairing: (p|q) of the two factors differ");
    }
    return dual.value * primal.value;
}

BerCoordinate rebase_primal(const BerCoordinate &c, const GrassmannMatrix &g)
{
    if (g.p() != c.p || g.q() != c.q) {
        throw DimensionError("basis change has wrong dimension");
    }
    // D(x') = Ber(g) D(x)
    return {c.value * inverse_even(berezinian(g)), c.p, c.q};
}

BerCoordinate rebase_dual(const BerCoordinate &c, const GrassmannMatrix &g)
{
    if (g.p() != c.p || g.q() != c.q) {
        throw DimensionError("basis change has wrong dimension");
    }
    // The dual basis transforms by the supertranspose of g^-1.
    const auto dual_change = supertranspose(inverse(g));
    return {c.value * inverse_even(berezinian(dual_change)), c.p, c.q};
}

} // namespace superint
