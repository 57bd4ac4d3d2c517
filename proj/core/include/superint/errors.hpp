#ifndef SUPERINT_ERRORS_HPP
#define SUPERINT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace superint
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Mismatched generator counts, block sizes, shapes or indices.
class DimensionError : public Error
{
public:
    using Error::Error;
};

// An element of the wrong parity was supplied.
class ParityError : public Error
{
public:
    using Error::Error;
};

// Body of an element or matrix block is not invertible.
class SingularError : public Error
{
public:
    using Error::Error;
};

// Body map leaves the target box, or a point lies outside a domain.
class DomainError : public Error
{
public:
    using Error::Error;
};

// Addition of scalars carrying different powers of sqrt(2 pi).
class ExponentMismatchError : public Error
{
public:
    using Error::Error;
};

// A truncated computation could not decide (too small cap or ansatz).
class InconclusiveError : public Error
{
public:
    using Error::Error;
};

// Input data violates a structural requirement (not a subalgebra, not an isomorphism, ...).
class StructuralError : public Error
{
public:
    using Error::Error;
};

// Integrand is outside the closed-form class of the chosen backend.
class IntegrationError : public Error
{
public:
    using Error::Error;
};

// Berezinian sections that should agree differ; carries the constant factor when there is one.
class NormalizationError : public Error
{
public:
    NormalizationError(const std::string &what, std::string factor) : Error(what), m_factor(std::move(factor)) {}
    const std::string &factor() const noexcept
    {
        return m_factor;
    }

private:
    std::string m_factor;
};

// A file could not be read.
class IoError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg), m_line(line),
          m_column(column)
    {
    }
    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }

private:
    std::size_t m_line;
    std::size_t m_column;
};

} // namespace superint

#endif
