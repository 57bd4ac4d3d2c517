#ifndef SUPERINT_IO_HPP
#define SUPERINT_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <superint/grassmann.hpp>
#include <superint/lie_super.hpp>
#include <superint/polynomial.hpp>
#include <superint/scalar.hpp>
#include <superint/superdomain.hpp>
#include <superint/supermatrix.hpp>

namespace superint
{

// Line-oriented text formats. '#' starts a comment that runs to the end of the line.
// Every formatter writes text that the matching parser reads back to an equal value.
// Parse failures raise ParseError with a 1-based line and column.

// Rational times a power of s, e.g. "-3/2 s^2".
Scalar parse_scalar(std::string_view text);

// Terms "coeff s^k xi1 xi3" joined by + and -, '*' between factors optional.
// generator_count 0 means: the largest generator index that occurs.
GrassmannElement parse_grassmann(std::string_view text, unsigned generator_count = 0);

// Laurent polynomial in x1..x_nvars, e.g. "3/2 x1^2 x2 - x1^-1".
Polynomial parse_polynomial(std::string_view text, unsigned nvars);

// Header "p q N", then (p+q)^2 elements row-major, one per line.
GrassmannMatrix parse_supermatrix(std::string_view text);
std::string format_supermatrix(const GrassmannMatrix &x);

// Header "m n aux", optional line "box I1 ... Im" with intervals R, [a, b], (a, inf), ...,
// then lines "polynomial : xi-monomial" (an empty monomial is the odd unit).
SuperFunction parse_superfunction(std::string_view text);
std::string format_superfunction(const SuperFunction &f);

Interval parse_interval(std::string_view text);

// Header "name:parity ..." with parity 0 or 1, then lines "i j -> c1 ... cn" with 0-based
// indices. Unlisted mirrors are completed by graded antisymmetry; no validation is done here.
LieSuperAlgebra parse_lie_algebra(std::string_view text);
std::string format_lie_algebra(const LieSuperAlgebra &g);

std::string read_text_file(const std::string &path);

} // namespace superint

#endif
