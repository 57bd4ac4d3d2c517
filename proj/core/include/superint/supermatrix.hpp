#ifndef SUPERINT_SUPERMATRIX_HPP
#define SUPERINT_SUPERMATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <superint/errors.hpp>
#include <superint/grassmann.hpp>
#include <superint/linalg.hpp>
#include <superint/scalar.hpp>

namespace superint
{

inline GrassmannElement zero_like(const GrassmannElement &g)
{
    return GrassmannElement(g.generator_count());
}

inline GrassmannElement one_like(const GrassmannElement &g)
{
    return GrassmannElement(g.generator_count(), Scalar(1));
}

// Square (p|q) x (p|q) supermatrix over a supercommutative ring R (GrassmannElement or
// SuperFunction). Rows and columns 0..p-1 are even, p..p+q-1 odd. For a matrix of parity
// P, entry (i,j) has parity P + |i| + |j|; the even matrices are the usual
// [[A, B], [C, D]] with A, D even and B, C odd.
template <class R>
class SuperMatrix
{
public:
    SuperMatrix(unsigned p, unsigned q, std::vector<R> entries, const R &zero, Parity parity = Parity::even)
        : m_p(p), m_q(q), m_parity(parity), m_zero(zero_like(zero)), m_entries(std::move(entries))
    {
        if (m_entries.size() != static_cast<std::size_t>(size()) * size()) {
            throw DimensionError("supermatrix needs " + std::to_string(size() * size()) + " entries");
        }
        for (unsigned i = 0; i < size(); ++i) {
            for (unsigned j = 0; j < size(); ++j) {
                const R &e = (*this)(i, j);
                if (e.is_zero()) {
                    continue;
                }
                const auto par = e.parity();
                if (!par || *par != expected_parity(i, j)) {
                    throw ParityError("supermatrix entry (" + std::to_string(i) + "," + std::to_string(j)
                                      + ") must be " + to_string(expected_parity(i, j)));
                }
            }
        }
    }

    static SuperMatrix zero(unsigned p, unsigned q, const R &proto, Parity parity = Parity::even)
    {
        return SuperMatrix(p, q, std::vector<R>((p + q) * (p + q), zero_like(proto)), proto, parity);
    }

    static SuperMatrix identity(unsigned p, unsigned q, const R &proto)
    {
        auto m = zero(p, q, proto);
        for (unsigned i = 0; i < p + q; ++i) {
            m.m_entries[i * (p + q) + i] = one_like(proto);
        }
        return m;
    }

    unsigned p() const noexcept
    {
        return m_p;
    }
    unsigned q() const noexcept
    {
        return m_q;
    }
    unsigned size() const noexcept
    {
        return m_p + m_q;
    }
    Parity parity() const noexcept
    {
        return m_parity;
    }
    const R &zero_element() const noexcept
    {
        return m_zero;
    }
    const R &operator()(unsigned i, unsigned j) const
    {
        return m_entries[i * size() + j];
    }
    const std::vector<R> &entries() const noexcept
    {
        return m_entries;
    }

    Parity index_parity(unsigned i) const noexcept
    {
        return i < m_p ? Parity::even : Parity::odd;
    }
    Parity expected_parity(unsigned i, unsigned j) const noexcept
    {
        return m_parity + index_parity(i) + index_parity(j);
    }

    // Square block of rows/cols [lo, hi) as a plain row-major vector.
    std::vector<R> block(unsigned r0, unsigned r1, unsigned c0, unsigned c1) const
    {
        std::vector<R> out;
        out.reserve((r1 - r0) * (c1 - c0));
        for (unsigned i = r0; i < r1; ++i) {
            for (unsigned j = c0; j < c1; ++j) {
                out.push_back((*this)(i, j));
            }
        }
        return out;
    }

    friend bool operator==(const SuperMatrix &a, const SuperMatrix &b)
    {
        return a.m_p == b.m_p && a.m_q == b.m_q && a.m_parity == b.m_parity && a.m_entries == b.m_entries;
    }

private:
    unsigned m_p, m_q;
    Parity m_parity;
    R m_zero;
    std::vector<R> m_entries;
};

namespace detail
{

template <class R>
void check_compatible(const SuperMatrix<R> &x, const SuperMatrix<R> &y)
{
    if (x.p() != y.p() || x.q() != y.q()) {
        throw DimensionError("supermatrix block dimensions differ");
    }
}

// Plain n x n product of row-major blocks (entry order preserved for odd entries).
template <class R>
std::vector<R> block_mul(const std::vector<R> &a, const std::vector<R> &b, unsigned rows, unsigned inner,
                         unsigned cols, const R &zero)
{
    std::vector<R> out(rows * cols, zero);
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) {
            R acc = zero;
            for (unsigned k = 0; k < inner; ++k) {
                acc += a[i * inner + k] * b[k * cols + j];
            }
            out[i * cols + j] = std::move(acc);
        }
    }
    return out;
}

// Determinant of an n x n matrix with pairwise commuting (even) entries, by Laplace
// expansion along the first row.
template <class R>
R even_determinant(const std::vector<R> &m, unsigned n, const R &zero)
{
    if (n == 0) {
        return one_like(zero);
    }
    std::vector<unsigned> cols(n);
    for (unsigned j = 0; j < n; ++j) {
        cols[j] = j;
    }
    auto rec = [&](auto &&self, unsigned row, std::vector<unsigned> &avail) -> R {
        if (avail.size() == 1) {
            return m[row * n + avail[0]];
        }
        R acc = zero;
        for (std::size_t k = 0; k < avail.size(); ++k) {
            const R &e = m[row * n + avail[k]];
            if (e.is_zero()) {
                continue;
            }
            std::vector<unsigned> rest;
            rest.reserve(avail.size() - 1);
            for (std::size_t l = 0; l < avail.size(); ++l) {
                if (l != k) {
                    rest.push_back(avail[l]);
                }
            }
            R minor = self(self, row + 1, rest);
            if (k % 2 == 0) {
                acc += e * minor;
            } else {
                acc -= e * minor;
            }
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

// Inverse of an n x n matrix with even entries via adjugate / determinant.
template <class R>
std::vector<R> even_block_inverse(const std::vector<R> &m, unsigned n, const R &zero)
{
    const R det = even_determinant(m, n, zero);
    if (det.body().is_zero()) {
        throw SingularError("even block has non-invertible body determinant");
    }
    const R det_inv = inverse_even(det);
    std::vector<R> inv(n * n, zero);
    if (n == 1) {
        inv[0] = det_inv;
        return inv;
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            // cofactor C_ji goes to inv(i,j)
            std::vector<R> minor;
            minor.reserve((n - 1) * (n - 1));
            for (unsigned r = 0; r < n; ++r) {
                if (r == j) {
                    continue;
                }
                for (unsigned c = 0; c < n; ++c) {
                    if (c != i) {
                        minor.push_back(m[r * n + c]);
                    }
                }
            }
            R cof = even_determinant(minor, n - 1, zero);
            if ((i + j) % 2 == 1) {
                cof = -cof;
            }
            inv[i * n + j] = cof * det_inv;
        }
    }
    return inv;
}

template <class R>
std::vector<R> block_sub(std::vector<R> a, const std::vector<R> &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
    }
    return a;
}

template <class R>
std::vector<R> block_neg(std::vector<R> a)
{
    for (auto &e : a) {
        e = -e;
    }
    return a;
}

} // namespace detail

template <class R>
SuperMatrix<R> sm_mul(const SuperMatrix<R> &x, const SuperMatrix<R> &y)
{
    detail::check_compatible(x, y);
    const unsigned n = x.size();
    auto prod = detail::block_mul(x.entries(), y.entries(), n, n, n, x.zero_element());
    return SuperMatrix<R>(x.p(), x.q(), std::move(prod), x.zero_element(), x.parity() + y.parity());
}

template <class R>
SuperMatrix<R> operator*(const SuperMatrix<R> &x, const SuperMatrix<R> &y)
{
    return sm_mul(x, y);
}

template <class R>
SuperMatrix<R> operator+(const SuperMatrix<R> &x, const SuperMatrix<R> &y)
{
    detail::check_compatible(x, y);
    if (x.parity() != y.parity()) {
        throw ParityError("sum of supermatrices of different parity");
    }
    auto e = x.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += y.entries()[i];
    }
    return SuperMatrix<R>(x.p(), x.q(), std::move(e), x.zero_element(), x.parity());
}

template <class R>
SuperMatrix<R> operator-(const SuperMatrix<R> &x, const SuperMatrix<R> &y)
{
    detail::check_compatible(x, y);
    if (x.parity() != y.parity()) {
        throw ParityError("difference of supermatrices of different parity");
    }
    return SuperMatrix<R>(x.p(), x.q(), detail::block_sub(x.entries(), y.entries()), x.zero_element(), x.parity());
}

template <class R>
SuperMatrix<R> scale(const SuperMatrix<R> &x, const Rational &c)
{
    auto e = x.entries();
    for (auto &v : e) {
        v *= c;
    }
    return SuperMatrix<R>(x.p(), x.q(), std::move(e), x.zero_element(), x.parity());
}

// str X = tr A - (-1)^|X| tr D.
template <class R>
R supertrace(const SuperMatrix<R> &x)
{
    R acc = x.zero_element();
    for (unsigned i = 0; i < x.size(); ++i) {
        if (i < x.p() || x.parity() == Parity::odd) {
            acc += x(i, i);
        } else {
            acc -= x(i, i);
        }
    }
    return acc;
}

// Ber X = det(A - B D^-1 C) det(D)^-1 for an even supermatrix with invertible A and D bodies.
template <class R>
R berezinian(const SuperMatrix<R> &x)
{
    if (x.parity() != Parity::even) {
        throw ParityError("Berezinian of an odd supermatrix");
    }
    const unsigned p = x.p(), q = x.q(), n = x.size();
    const R &zero = x.zero_element();
    auto a = x.block(0, p, 0, p);
    if (q == 0) {
        R det = detail::even_determinant(a, p, zero);
        if (det.body().is_zero()) {
            throw SingularError("Berezinian: A block is singular");
        }
        return det;
    }
    auto b = x.block(0, p, p, n);
    auto c = x.block(p, n, 0, p);
    auto d = x.block(p, n, p, n);
    const R det_d = detail::even_determinant(d, q, zero);
    if (det_d.body().is_zero()) {
        throw SingularError("Berezinian: D block is singular");
    }
    const auto d_inv = detail::even_block_inverse(d, q, zero);
    const auto bdc = detail::block_mul(detail::block_mul(b, d_inv, p, q, q, zero), c, p, q, p, zero);
    const R schur = detail::even_determinant(detail::block_sub(a, bdc), p, zero);
    if (schur.body().is_zero()) {
        throw SingularError("Berezinian: A block is singular");
    }
    return schur * inverse_even(det_d);
}

// Block inverse of an even-invertible even supermatrix.
template <class R>
SuperMatrix<R> inverse(const SuperMatrix<R> &x)
{
    if (x.parity() != Parity::even) {
        throw ParityError("inverse of an odd supermatrix");
    }
    const unsigned p = x.p(), q = x.q(), n = x.size();
    const R &zero = x.zero_element();
    auto a = x.block(0, p, 0, p);
    auto b = x.block(0, p, p, n);
    auto c = x.block(p, n, 0, p);
    auto d = x.block(p, n, p, n);
    const auto a_inv = detail::even_block_inverse(a, p, zero);
    const auto d_inv = detail::even_block_inverse(d, q, zero);
    // S_A = A - B D^-1 C, S_D = D - C A^-1 B
    const auto sa = detail::block_sub(a, detail::block_mul(detail::block_mul(b, d_inv, p, q, q, zero), c, p, q, p, zero));
    const auto sd = detail::block_sub(d, detail::block_mul(detail::block_mul(c, a_inv, q, p, p, zero), b, q, p, q, zero));
    const auto sa_inv = detail::even_block_inverse(sa, p, zero);
    const auto sd_inv = detail::even_block_inverse(sd, q, zero);
    const auto top_right
        = detail::block_neg(detail::block_mul(detail::block_mul(a_inv, b, p, p, q, zero), sd_inv, p, q, q, zero));
    const auto bottom_left
        = detail::block_neg(detail::block_mul(detail::block_mul(d_inv, c, q, q, p, zero), sa_inv, q, p, p, zero));
    std::vector<R> out(n * n, zero);
    for (unsigned i = 0; i < p; ++i) {
        for (unsigned j = 0; j < p; ++j) {
            out[i * n + j] = sa_inv[i * p + j];
        }
        for (unsigned j = 0; j < q; ++j) {
            out[i * n + p + j] = top_right[i * q + j];
        }
    }
    for (unsigned i = 0; i < q; ++i) {
        for (unsigned j = 0; j < p; ++j) {
            out[(p + i) * n + j] = bottom_left[i * p + j];
        }
        for (unsigned j = 0; j < q; ++j) {
            out[(p + i) * n + p + j] = sd_inv[i * q + j];
        }
    }
    return SuperMatrix<R>(p, q, std::move(out), zero);
}

// [[A, B], [C, D]]^st = [[A^t, C^t], [-B^t, D^t]] for even matrices.
template <class R>
SuperMatrix<R> supertranspose(const SuperMatrix<R> &x)
{
    if (x.parity() != Parity::even) {
        throw ParityError("supertranspose is implemented for even supermatrices");
    }
    const unsigned n = x.size(), p = x.p();
    std::vector<R> out(n * n, x.zero_element());
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            R v = x(j, i);
            if (i >= p && j < p) {
                v = -v;
            }
            out[i * n + j] = std::move(v);
        }
    }
    return SuperMatrix<R>(x.p(), x.q(), std::move(out), x.zero_element());
}

template <class R>
std::string to_string(const SuperMatrix<R> &x)
{
    std::string out;
    for (unsigned i = 0; i < x.size(); ++i) {
        out += "[";
        for (unsigned j = 0; j < x.size(); ++j) {
            out += (j ? ", " : "") + x(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

using GrassmannMatrix = SuperMatrix<GrassmannElement>;

// Rational block-diagonal supermatrix embedded over Lambda_N (N = generator_count).
GrassmannMatrix to_grassmann_matrix(const RationalMatrix &m, unsigned p, unsigned q, unsigned generator_count = 0,
                                    Parity parity = Parity::even);

// ---------------------------------------------------------------------------------------
// Homological picture of Ber(V): homology of multiplication by the canonical odd element
// Pi in S(Pi V + V*), truncated by total polynomial degree.

struct KoszulComplexSlice {
    unsigned p = 0, q = 0;
    unsigned degree_cap = 0;
    // Per degree k: basis size, parity of each basis vector, and the matrix of
    // multiplication by Pi from degree k to degree k+2 (rows index degree k+2).
    std::vector<std::vector<Parity>> basis_parity;
    std::vector<RationalMatrix> differential;

    static KoszulComplexSlice build(unsigned p, unsigned q, unsigned degree_cap);

    // d o d = 0 on every retained pair of degrees.
    bool squares_to_zero() const;

    // Homology dimensions (even, odd) at degree k; requires k + 2 <= degree_cap.
    std::pair<std::size_t, std::size_t> homology(unsigned k) const;
};

struct HomologicalBerezinian {
    std::size_t total_dim = 0;
    Parity parity = Parity::even;
    // Homology (before the parity shift by p) split by parity.
    std::size_t even_dim = 0, odd_dim = 0;
};

// Throws InconclusiveError when results at degree_cap and degree_cap + 1 disagree.
HomologicalBerezinian homological_berezinian(unsigned p, unsigned q, unsigned degree_cap);

// ---------------------------------------------------------------------------------------
// Coordinates of Ber(V) in the basis D(x_1..x_n) and of Ber(V*) in D(xi_n..xi_1).

struct BerCoordinate {
    GrassmannElement value;
    unsigned p = 0, q = 0;
};

// <c1 D(xi_n..xi_1), c2 D(x_1..x_n)> = c1 c2.
GrassmannElement canonical_pairing(const BerCoordinate &dual, const BerCoordinate &primal);

// Coordinates after the basis change x'_j = sum_i x_i g_ij (and the induced dual basis change).
BerCoordinate rebase_primal(const BerCoordinate &c, const GrassmannMatrix &g);
BerCoordinate rebase_dual(const BerCoordinate &c, const GrassmannMatrix &g);

} // namespace superint

#endif
