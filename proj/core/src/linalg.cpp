#include <superint/errors.hpp>
#include <superint/linalg.hpp>

#include <utility>

namespace superint
{

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b)
{
    if (a.m_cols != b.m_rows) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    RationalMatrix r(a.m_rows, b.m_cols);
    for (std::size_t i = 0; i < a.m_rows; ++i) {
        for (std::size_t k = 0; k < a.m_cols; ++k) {
            const Rational &aik = a(i, k);
            if (sgn(aik) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_cols; ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

void RationalMatrix::append_row(const std::vector<Rational> &row)
{
    if (m_rows == 0 && m_cols == 0) {
        m_cols = row.size();
    }
    if (row.size() != m_cols) {
        throw DimensionError("appended row has wrong length");
    }
    m_data.insert(m_data.end(), row.begin(), row.end());
    ++m_rows;
}

std::vector<std::size_t> row_reduce(RationalMatrix &m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && sgn(m(piv, c)) == 0) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(r, j), m(piv, j));
            }
        }
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) {
                continue;
            }
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m)
{
    return row_reduce(m).size();
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix m)
{
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix inverse(const RationalMatrix &m)
{
    if (m.rows() != m.cols()) {
        throw DimensionError("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = 1;
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw SingularError("matrix is singular");
    }
    RationalMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = aug(i, n + j);
        }
    }
    return r;
}

std::vector<Rational> solve(const RationalMatrix &m, const std::vector<Rational> &b, bool *consistent)
{
    if (b.size() != m.rows()) {
        throw DimensionError("right-hand side has wrong length");
    }
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug);
    std::vector<Rational> x(m.cols());
    bool ok = true;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols()) {
            ok = false;
            break;
        }
        x[pivots[r]] = aug(r, m.cols());
    }
    if (consistent) {
        *consistent = ok;
    }
    return x;
}

} // namespace superint
