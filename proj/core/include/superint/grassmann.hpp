#ifndef SUPERINT_GRASSMANN_HPP
#define SUPERINT_GRASSMANN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <superint/scalar.hpp>

namespace superint
{

// Set of odd generator indices (bit i = generator i, 0-based). Monomials are always
// stored in strictly increasing generator order.
using OddMask = std::uint64_t;

inline constexpr unsigned max_odd_generators = 64;

inline unsigned degree(OddMask m) noexcept
{
    return static_cast<unsigned>(__builtin_popcountll(m));
}

inline Parity mask_parity(OddMask m) noexcept
{
    return parity_of(degree(m));
}

inline OddMask full_mask(unsigned n) noexcept
{
    return n >= 64 ? ~OddMask{0} : ((OddMask{1} << n) - 1u);
}

// Sign of the permutation that sorts the concatenation a.b into increasing order;
// 0 when a and b share a generator.
int merge_sign(OddMask a, OddMask b) noexcept;

std::vector<unsigned> mask_indices(OddMask m);

// Degree first, then lexicographic on the increasing index lists.
struct MonomialOrder {
    bool operator()(OddMask a, OddMask b) const noexcept
    {
        const auto da = degree(a), db = degree(b);
        if (da != db) {
            return da < db;
        }
        if (a == b) {
            return false;
        }
        const OddMask low = (a ^ b) & (~(a ^ b) + 1u);
        return (a & low) != 0;
    }
};

// Element of the Grassmann algebra over N odd generators with Scalar coefficients.
class GrassmannElement
{
public:
    using term_map = std::map<OddMask, Scalar, MonomialOrder>;

    explicit GrassmannElement(unsigned generator_count = 0);
    GrassmannElement(unsigned generator_count, const Scalar &c);

    static GrassmannElement generator(unsigned generator_count, unsigned index);
    static GrassmannElement monomial(unsigned generator_count, OddMask m, const Scalar &c = Scalar(1));

    unsigned generator_count() const noexcept
    {
        return m_n;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    Scalar coefficient(OddMask m) const;
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    Scalar body() const;
    GrassmannElement soul() const;

    // Parity when homogeneous; zero counts as even.
    std::optional<Parity> parity() const;
    GrassmannElement even_part() const;
    GrassmannElement odd_part() const;

    // Embed into a larger algebra, shifting generator i to i + offset.
    GrassmannElement pad(unsigned new_generator_count, unsigned offset = 0) const;

    void add_term(OddMask m, const Scalar &c);

    GrassmannElement &operator+=(const GrassmannElement &o);
    GrassmannElement &operator-=(const GrassmannElement &o);
    GrassmannElement &operator*=(const GrassmannElement &o);
    GrassmannElement &operator*=(const Scalar &c);

    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement &b)
    {
        return a += b;
    }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement &b)
    {
        return a -= b;
    }
    friend GrassmannElement operator*(const GrassmannElement &a, const GrassmannElement &b);
    friend GrassmannElement operator*(GrassmannElement a, const Scalar &c)
    {
        return a *= c;
    }
    friend GrassmannElement operator*(const Scalar &c, GrassmannElement a)
    {
        return a *= c;
    }
    GrassmannElement operator-() const;

    friend bool operator==(const GrassmannElement &a, const GrassmannElement &b)
    {
        return a.m_n == b.m_n && a.m_terms == b.m_terms;
    }

    // Canonical text form, e.g. "-1 + 3/2 xi1 xi3" (generators are 1-based in text).
    std::string str() const;

private:
    void check_same(const GrassmannElement &o) const;

    unsigned m_n;
    term_map m_terms;
};

// Inverse of an even element with invertible body via the terminating Neumann series.
GrassmannElement inverse_even(const GrassmannElement &a);

GrassmannElement pow(const GrassmannElement &a, unsigned k);

std::ostream &operator<<(std::ostream &os, const GrassmannElement &g);

namespace detail
{
// Appends " + c mono" / "- c mono" in canonical form. `factors` is the already
// formatted monomial ("" for 1).
void append_term(std::string &out, const Scalar &c, const std::string &factors);
} // namespace detail

} // namespace superint

#endif
