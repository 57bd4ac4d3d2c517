#ifndef SUPERINT_SUPERDOMAIN_HPP
#define SUPERINT_SUPERDOMAIN_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <superint/grassmann.hpp>
#include <superint/polynomial.hpp>
#include <superint/scalar.hpp>
#include <superint/supermatrix.hpp>

namespace superint
{

// Interval of the real line; a missing endpoint is infinite. Finite endpoints are closed
// unless flagged open.
struct Interval {
    std::optional<Rational> lo, hi;
    bool lo_open = false, hi_open = false;

    static Interval all()
    {
        return {};
    }
    static Interval closed(const Rational &a, const Rational &b);
    // (a, infinity)
    static Interval above(const Rational &a);

    bool is_all() const noexcept
    {
        return !lo && !hi;
    }
    bool is_bounded() const noexcept
    {
        return lo && hi;
    }
    bool contains(const Rational &x) const;
    // True when every point of `inner` lies in this interval.
    bool contains(const Interval &inner) const;
    // `count` representative points (endpoints included where closed).
    std::vector<Rational> samples(unsigned count) const;

    std::string str() const;
    friend bool operator==(const Interval &, const Interval &) = default;
};

using Box = std::vector<Interval>;

bool box_contains(const Box &outer, const Box &inner);

// Coordinate superdomain: m even coordinates ranging over `box`, n odd coordinates, plus
// generalized-point parameters (`params` even, `aux` odd) that ride along as spectators.
// Even variable order: coordinates then params. Odd generator order: coordinates then aux.
struct SuperDomainShape {
    unsigned m = 0;
    unsigned n = 0;
    unsigned params = 0;
    unsigned aux = 0;
    Box box; // m + params intervals

    static SuperDomainShape make(unsigned m, unsigned n, Box box = {}, unsigned aux = 0);

    unsigned even_count() const noexcept
    {
        return m + params;
    }
    unsigned odd_count() const noexcept
    {
        return n + aux;
    }
    // Same coordinates with extra spectator parameters appended.
    SuperDomainShape with_parameters(unsigned extra_params, unsigned extra_aux, const Box &param_box = {}) const;
    // Drops parameters and aux generators.
    SuperDomainShape bare() const;

    std::string str() const;
    friend bool operator==(const SuperDomainShape &, const SuperDomainShape &) = default;
};

// B x F with even coordinates (x, y) and odd coordinates (xi, eta); both factors must be bare.
SuperDomainShape product_shape(const SuperDomainShape &base, const SuperDomainShape &fibre);

// Superfunction sum_alpha xi^alpha f_alpha with Laurent polynomial coefficients.
class SuperFunction
{
public:
    using coeff_map = std::map<OddMask, Polynomial, MonomialOrder>;

    explicit SuperFunction(SuperDomainShape shape = {});
    SuperFunction(SuperDomainShape shape, const Rational &c);

    static SuperFunction even_coordinate(const SuperDomainShape &shape, unsigned i);
    static SuperFunction odd_coordinate(const SuperDomainShape &shape, unsigned j);
    static SuperFunction from_polynomial(const SuperDomainShape &shape, Polynomial p);
    static SuperFunction monomial(const SuperDomainShape &shape, OddMask m, Polynomial p);
    // Grassmann element over the odd generators as a superfunction constant in x.
    static SuperFunction from_grassmann(const SuperDomainShape &shape, const GrassmannElement &g);

    const SuperDomainShape &shape() const noexcept
    {
        return m_shape;
    }
    const coeff_map &coeffs() const noexcept
    {
        return m_coeffs;
    }
    Polynomial coefficient(OddMask m) const;
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }

    // Coefficient of the empty monomial.
    Polynomial body() const;
    SuperFunction soul() const;
    std::optional<Parity> parity() const;
    SuperFunction even_part() const;
    SuperFunction odd_part() const;

    void add_term(OddMask m, const Polynomial &p);

    SuperFunction &operator+=(const SuperFunction &o);
    SuperFunction &operator-=(const SuperFunction &o);
    SuperFunction &operator*=(const Rational &c);
    SuperFunction &operator*=(const Scalar &c);
    friend SuperFunction operator+(SuperFunction a, const SuperFunction &b)
    {
        return a += b;
    }
    friend SuperFunction operator-(SuperFunction a, const SuperFunction &b)
    {
        return a -= b;
    }
    friend SuperFunction operator*(const SuperFunction &a, const SuperFunction &b);
    friend SuperFunction operator*(SuperFunction a, const Rational &c)
    {
        return a *= c;
    }
    SuperFunction operator-() const;

    friend bool operator==(const SuperFunction &a, const SuperFunction &b)
    {
        return a.m_shape == b.m_shape && a.m_coeffs == b.m_coeffs;
    }

    // d/dx_i on coefficients (i < m + params).
    SuperFunction derive_even(unsigned i) const;
    // Left derivative d/dxi_j (j < n + aux).
    SuperFunction derive_odd(unsigned j) const;

    // Same coefficients viewed on another shape with identical variable counts.
    SuperFunction reshaped(const SuperDomainShape &shape) const;

    // Substitutes the even variables; result lives in Lambda_{n+aux}.
    GrassmannElement evaluate(std::span<const Rational> point) const;

    // "x1^2 + 1 : xi1 xi2" lines, one per odd monomial.
    std::string str() const;

private:
    void check_same(const SuperFunction &o) const;

    SuperDomainShape m_shape;
    coeff_map m_coeffs;
};

inline SuperFunction zero_like(const SuperFunction &f)
{
    return SuperFunction(f.shape());
}

inline SuperFunction one_like(const SuperFunction &f)
{
    return SuperFunction(f.shape(), Rational(1));
}

// Inverse of an even superfunction whose body is a Laurent monomial.
SuperFunction inverse_even(const SuperFunction &f);

// f^k for any integer k (k < 0 uses inverse_even).
SuperFunction pow(const SuperFunction &f, int k);

std::ostream &operator<<(std::ostream &os, const SuperFunction &f);

using FunctionMatrix = SuperMatrix<SuperFunction>;

// Sampling policy for checking that the body map sends the source box into the target box.
struct SamplingPolicy {
    bool enabled = true;
    unsigned points_per_axis = 3;
};

// Morphism of superdomains given by the pullbacks of the target coordinates. Target
// parameters/aux generators are identified with the leading source parameters/aux
// generators.
class SuperMorphism
{
public:
    SuperMorphism(SuperDomainShape source, SuperDomainShape target, std::vector<SuperFunction> even_components,
                  std::vector<SuperFunction> odd_components, bool oriented = true);

    static SuperMorphism identity(const SuperDomainShape &shape);

    const SuperDomainShape &source() const noexcept
    {
        return m_source;
    }
    const SuperDomainShape &target() const noexcept
    {
        return m_target;
    }
    const std::vector<SuperFunction> &even_components() const noexcept
    {
        return m_even;
    }
    const std::vector<SuperFunction> &odd_components() const noexcept
    {
        return m_odd;
    }
    bool oriented() const noexcept
    {
        return m_oriented;
    }

    // Image of target even variable i (coordinate or parameter) and odd generator j.
    SuperFunction even_image(unsigned i) const;
    SuperFunction odd_image(unsigned j) const;

    friend bool operator==(const SuperMorphism &a, const SuperMorphism &b)
    {
        return a.m_source == b.m_source && a.m_target == b.m_target && a.m_even == b.m_even && a.m_odd == b.m_odd;
    }

private:
    SuperDomainShape m_source, m_target;
    std::vector<SuperFunction> m_even, m_odd;
    bool m_oriented;
};

// Throws DomainError if a sampled body image leaves the target box. Returns the number of
// sample points examined (0 when nothing needed checking).
std::size_t check_body_in_box(const SuperMorphism &phi, const SamplingPolicy &policy = {});

SuperFunction pullback(const SuperMorphism &phi, const SuperFunction &f, const SamplingPolicy &policy = {});

// psi o phi (phi first), i.e. components phi^*(psi components).
SuperMorphism compose(const SuperMorphism &phi, const SuperMorphism &psi, const SamplingPolicy &policy = {});

// J_ab = d_a phi^b (left derivatives): rows are source coordinates, columns target
// coordinates, both ordered even-then-odd. Requires equal graded dimensions.
FunctionMatrix jacobian(const SuperMorphism &phi);

// Jacobian with respect to the listed source even / odd coordinates only.
FunctionMatrix jacobian_wrt(const SuperMorphism &phi, std::span<const unsigned> even_sources,
                            std::span<const unsigned> odd_sources);

// Body Jacobian determinant positivity on the sampled grid (orientation check).
bool preserves_orientation(const SuperMorphism &phi, const SamplingPolicy &policy = {});

// Coordinate projections of A x B.
SuperMorphism projection_first(const SuperDomainShape &a, const SuperDomainShape &b);
SuperMorphism projection_second(const SuperDomainShape &a, const SuperDomainShape &b);

// (phi, psi): S -> T1 x T2 for phi: S -> T1, psi: S -> T2 (bare targets).
SuperMorphism pair(const SuperMorphism &phi, const SuperMorphism &psi);

// phi x psi: S1 x S2 -> T1 x T2 (bare shapes).
SuperMorphism product(const SuperMorphism &phi, const SuperMorphism &psi);

// Constant morphism onto a point with zero odd part.
SuperMorphism constant_morphism(const SuperDomainShape &source, const SuperDomainShape &target,
                                std::span<const Rational> point);

} // namespace superint

#endif
