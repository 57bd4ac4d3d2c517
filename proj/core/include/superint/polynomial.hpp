#ifndef SUPERINT_POLYNOMIAL_HPP
#define SUPERINT_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <superint/scalar.hpp>

namespace superint
{

// Exponent vector of a Laurent monomial; negative entries are allowed.
using Exponents = std::vector<int>;

struct ExponentOrder {
    bool operator()(const Exponents &a, const Exponents &b) const noexcept;
};

// Laurent polynomial with rational coefficients in a fixed number of commuting variables.
class Polynomial
{
public:
    using term_map = std::map<Exponents, Rational, ExponentOrder>;

    explicit Polynomial(unsigned nvars = 0);
    Polynomial(unsigned nvars, const Rational &c);

    static Polynomial variable(unsigned nvars, unsigned i);
    static Polynomial monomial(unsigned nvars, Exponents e, const Rational &c = Rational(1));

    unsigned nvars() const noexcept
    {
        return m_nvars;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    // Constant term if the polynomial is constant.
    std::optional<Rational> constant_value() const;
    Rational coefficient(const Exponents &e) const;
    bool is_monomial() const noexcept
    {
        return m_terms.size() == 1;
    }
    bool has_negative_exponents() const;
    // Highest total degree over terms (ignores sign of exponents); -1 for zero.
    int max_abs_degree() const;

    void add_term(const Exponents &e, const Rational &c);

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Rational &c);
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c)
    {
        return a *= c;
    }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.m_nvars == b.m_nvars && a.m_terms == b.m_terms;
    }

    Polynomial derivative(unsigned i) const;

    // Throws DomainError if a negative power of a zero coordinate is needed.
    Rational evaluate(std::span<const Rational> point) const;

    // Reciprocal of a single-term polynomial; SingularError otherwise.
    Polynomial reciprocal() const;

    // Variable i of this polynomial becomes variable map[i] of a polynomial in new_nvars variables.
    Polynomial remap(unsigned new_nvars, std::span<const unsigned> map) const;

    // Text form, e.g. "3/2 x1^2 x2 - x1^-1 + 1".
    std::string str(const std::function<std::string(unsigned)> &name) const;
    std::string str() const;

private:
    void check_same(const Polynomial &o) const;

    unsigned m_nvars;
    term_map m_terms;
};

std::string default_even_name(unsigned i);

} // namespace superint

#endif
