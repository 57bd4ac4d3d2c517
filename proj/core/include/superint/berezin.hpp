#ifndef SUPERINT_BEREZIN_HPP
#define SUPERINT_BEREZIN_HPP

#include <span>
#include <string>
#include <vector>

#include <superint/grassmann.hpp>
#include <superint/scalar.hpp>
#include <superint/superdomain.hpp>

namespace superint
{

enum class BackendKind { gaussian_moments, box_polynomial };

// gaussian_moments: weight exp(-|x|^2/2) over all of R^m, values are rationals times s^m.
// box_polynomial: exact antiderivatives over a bounded rational box.
struct IntegrationBackend {
    BackendKind kind = BackendKind::gaussian_moments;
    Box box;

    static IntegrationBackend gaussian()
    {
        return {};
    }
    static IntegrationBackend over_box(Box b)
    {
        return {BackendKind::box_polynomial, std::move(b)};
    }
    // The first `count` axes of the box starting at `offset` (same kind).
    IntegrationBackend slice(unsigned offset, unsigned count) const;

    std::string str() const;
};

// omega = D(x, xi) . rho. The D-symbol sits to the left of the density; it has the parity
// of the odd dimension n, so a function f acts by f . (D rho) = D (f_even + (-1)^n f_odd) rho.
class BerezinSection
{
public:
    explicit BerezinSection(SuperFunction density, std::vector<std::string> basis_tag = {});

    const SuperDomainShape &shape() const noexcept
    {
        return m_density.shape();
    }
    const SuperFunction &density() const noexcept
    {
        return m_density;
    }
    const std::vector<std::string> &basis_tag() const noexcept
    {
        return m_tag;
    }

    // f . omega
    BerezinSection left_multiply(const SuperFunction &f) const;

    friend BerezinSection operator+(const BerezinSection &a, const BerezinSection &b);
    friend BerezinSection operator*(const BerezinSection &a, const Rational &c);
    friend bool operator==(const BerezinSection &a, const BerezinSection &b)
    {
        return a.m_density == b.m_density;
    }

    std::string str() const;

private:
    SuperFunction m_density;
    std::vector<std::string> m_tag;
};

// Default coordinate names x1..xm, xi1..xin.
std::vector<std::string> default_basis_tag(const SuperDomainShape &shape);

// Integral of a single Laurent polynomial over the backend (gaussian weight included).
Scalar integrate_polynomial(const Polynomial &p, const IntegrationBackend &backend);

// (-1)^{mn} times the backend integral of the top coordinate coefficient. Auxiliary odd
// generators are spectators; the result lives in Lambda_aux.
GrassmannElement integrate_graded(const BerezinSection &omega, const IntegrationBackend &backend);

// As integrate_graded, for sections without aux generators.
Scalar integrate(const BerezinSection &omega, const IntegrationBackend &backend);

// Density Ber(J_phi) . phi^*(rho) on the source. Requires phi to preserve orientation on the
// sample grid.
BerezinSection pullback_section(const SuperMorphism &phi, const BerezinSection &omega,
                                const SamplingPolicy &policy = {});

// Embeddings of functions on B and on F into functions on B x F.
SuperFunction lift_base(const SuperFunction &f, const SuperDomainShape &total);
SuperFunction lift_fibre(const SuperFunction &f, const SuperDomainShape &total);

// omega1 (x) omega2 expressed in D(x, y, xi, eta); carries the sign (-1)^{np}.
BerezinSection product_section(const BerezinSection &omega1, const BerezinSection &omega2);

// Result of integrating along the fibre: value is a function on the base times s^gauss_exponent.
struct FibreIntegral {
    SuperFunction value;
    int gauss_exponent = 0;
    // Structural support: base boxes of the terms that contributed.
    std::vector<Box> support;
};

// One term omega1 (x) omega2 of a fibre-integration input.
struct ProductTerm {
    SuperFunction base;
    BerezinSection fibre;
    Box base_support;  // empty = whole base box
    Box fibre_support; // empty = whole fibre box
};

// p_!(sum base_i (x) fibre_i) = sum base_i . integral(fibre_i).
FibreIntegral fibre_integrate(std::span<const ProductTerm> terms, const SuperDomainShape &base,
                              const IntegrationBackend &fibre_backend);

// Splits a function on B x F into product terms a (x) b with a on B and b on F.
std::vector<std::pair<SuperFunction, SuperFunction>> split_product(const SuperFunction &f,
                                                                  const SuperDomainShape &base,
                                                                  const SuperDomainShape &fibre);

// p_!(F . (1 (x) omega_F)) for a function F on B x F.
FibreIntegral fibre_integrate(const SuperFunction &total, const BerezinSection &fibre_section,
                              const SuperDomainShape &base, const IntegrationBackend &fibre_backend);

// Integral over B of value . omega_B, including the gaussian factor of the fibre integral.
Scalar integrate_base(const FibreIntegral &fi, const BerezinSection &omega_base, const IntegrationBackend &backend);

} // namespace superint

#endif
