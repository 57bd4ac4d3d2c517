#include <superint/errors.hpp>
#include <superint/scalar.hpp>

namespace superint
{

std::string to_string(const Rational &q)
{
    return q.get_str();
}

const char *to_string(Parity p) noexcept
{
    return p == Parity::even ? "even" : "odd";
}

Scalar::Scalar(Rational r, int gauss_exponent) : m_rational(std::move(r)), m_exponent(gauss_exponent)
{
    m_rational.canonicalize();
    if (sgn(m_rational) == 0) {
        m_exponent = 0;
    }
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (m_exponent != o.m_exponent) {
        throw ExponentMismatchError("cannot add scalars with sqrt(2pi) exponents " + std::to_string(m_exponent)
                                    + " and " + std::to_string(o.m_exponent));
    }
    m_rational += o.m_rational;
    if (sgn(m_rational) == 0) {
        m_exponent = 0;
    }
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    return *this += -o;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    m_rational *= o.m_rational;
    m_exponent = sgn(m_rational) == 0 ? 0 : m_exponent + o.m_exponent;
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.is_zero()) {
        throw SingularError("division of a scalar by zero");
    }
    m_rational /= o.m_rational;
    m_exponent = sgn(m_rational) == 0 ? 0 : m_exponent - o.m_exponent;
    return *this;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.m_rational = -r.m_rational;
    return r;
}

std::string Scalar::str() const
{
    if (m_exponent == 0) {
        return m_rational.get_str();
    }
    std::string out = m_rational.get_str();
    out += " s";
    if (m_exponent != 1) {
        out += "^" + std::to_string(m_exponent);
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
    return os << s.str();
}

} // namespace superint
