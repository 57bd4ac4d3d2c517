#ifndef SUPERINT_SCALAR_HPP
#define SUPERINT_SCALAR_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace superint
{

using Rational = mpq_class;

std::string to_string(const Rational &q);

enum class Parity : unsigned char { even = 0, odd = 1 };

inline constexpr Parity operator+(Parity a, Parity b) noexcept
{
    return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

inline constexpr Parity parity_of(unsigned long long n) noexcept
{
    return (n & 1u) ? Parity::odd : Parity::even;
}

inline constexpr int to_int(Parity p) noexcept
{
    return static_cast<int>(p);
}

// (-1)^(|a||b|)
inline constexpr int koszul_sign(Parity a, Parity b) noexcept
{
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

const char *to_string(Parity p) noexcept;

// Exact scalar r * s^k with s = sqrt(2 pi). Zero is normalised to exponent 0 and
// is the additive identity for every exponent.
class Scalar
{
public:
    Scalar() = default;
    Scalar(long v) : m_rational(v) {}
    Scalar(int v) : m_rational(v) {}
    Scalar(Rational r, int gauss_exponent = 0);

    const Rational &rational() const noexcept
    {
        return m_rational;
    }
    int gauss_exponent() const noexcept
    {
        return m_exponent;
    }
    bool is_zero() const noexcept
    {
        return sgn(m_rational) == 0;
    }

    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b)
    {
        return a += b;
    }
    friend Scalar operator-(Scalar a, const Scalar &b)
    {
        return a -= b;
    }
    friend Scalar operator*(Scalar a, const Scalar &b)
    {
        return a *= b;
    }
    friend Scalar operator/(Scalar a, const Scalar &b)
    {
        return a /= b;
    }
    Scalar operator-() const;

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        return a.m_exponent == b.m_exponent && a.m_rational == b.m_rational;
    }

    // "3/2", "-1 s^2", "s" (for 1 s^1).
    std::string str() const;

private:
    Rational m_rational{0};
    int m_exponent = 0;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace superint

#endif
