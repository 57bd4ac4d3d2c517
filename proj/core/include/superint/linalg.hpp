#ifndef SUPERINT_LINALG_HPP
#define SUPERINT_LINALG_HPP

#include <cstddef>
#include <vector>

#include <superint/scalar.hpp>

namespace superint
{

// Dense matrix over the rationals; used for structure constants, ansatz systems and
// homology ranks.
class RationalMatrix
{
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    Rational &operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_cols + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_cols + j];
    }

    friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
    friend bool operator==(const RationalMatrix &a, const RationalMatrix &b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }

    // Appends a row (cols must match, or the matrix is empty and cols is set).
    void append_row(const std::vector<Rational> &row);

private:
    std::size_t m_rows = 0, m_cols = 0;
    std::vector<Rational> m_data;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix &m);

std::size_t rank(RationalMatrix m);

// Basis of {v : M v = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

// Throws SingularError for singular input.
RationalMatrix inverse(const RationalMatrix &m);

// Solves M x = b (some solution when underdetermined); *consistent is cleared when none exists.
std::vector<Rational> solve(const RationalMatrix &m, const std::vector<Rational> &b, bool *consistent = nullptr);

} // namespace superint

#endif
