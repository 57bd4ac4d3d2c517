#ifndef SUPERINT_VERIFY_HPP
#define SUPERINT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <superint/grassmann.hpp>
#include <superint/superdomain.hpp>
#include <superint/supermatrix.hpp>

namespace superint
{

inline constexpr std::uint64_t default_seed = 20240611;

// One exact identity: both sides printed in canonical text form.
struct CheckLine {
    bool pass = false;
    std::string name, lhs, rhs;

    std::string str() const;
};

struct SuiteReport {
    std::string suite;
    std::optional<std::uint64_t> seed; // set for randomized suites
    std::vector<CheckLine> checks;

    std::size_t passed() const;
    bool pass() const
    {
        return !checks.empty() && passed() == checks.size();
    }
    // Check lines in case order, then "<suite>: k/n passed" and the seed if there is one.
    std::string str() const;
};

// Names accepted by run_suite, in a fixed order.
std::vector<std::string> suite_names();

// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string &name, std::uint64_t seed = default_seed);

// Named built-in verifications (deterministic, no seed).
std::vector<std::string> example_names();
SuiteReport run_example(const std::string &name);

// Ber(Ad_h)/Ber(Ad_u) for the even (true) or odd subgroup of super ax+b, from a hand-written
// conjugation formula rather than from the group law.
SuperFunction ax_plus_b_ratio_oracle(bool even_subgroup);

// Random data for property suites. All draws come from the given engine.
class RandomSource
{
public:
    explicit RandomSource(std::uint64_t seed) : m_engine(seed) {}

    int integer(int lo, int hi);
    // p/q with |p| <= bound, 1 <= q <= den_bound.
    Rational rational(int bound, int den_bound = 1);
    Rational nonzero_rational(int bound, int den_bound = 1);

    // Homogeneous element of Lambda_n with small integer coefficients; `density` is the
    // percentage of monomials drawn.
    GrassmannElement grassmann(unsigned n, Parity parity, int bound = 3, int density = 60);

    // Even supermatrix over Lambda_n with invertible bodies of A and D.
    GrassmannMatrix even_invertible(unsigned p, unsigned q, unsigned n);

    // Polynomial with terms of total degree <= max_degree.
    Polynomial polynomial(unsigned nvars, unsigned max_degree, int bound = 3, int density = 50);

    // Superfunction with random polynomial coefficients on every odd monomial.
    SuperFunction superfunction(const SuperDomainShape &shape, unsigned max_degree, int density = 50);

    std::mt19937_64 &engine() noexcept
    {
        return m_engine;
    }

private:
    std::mt19937_64 m_engine;
};

} // namespace superint

#endif
