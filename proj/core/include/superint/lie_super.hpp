#ifndef SUPERINT_LIE_SUPER_HPP
#define SUPERINT_LIE_SUPER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <superint/linalg.hpp>
#include <superint/scalar.hpp>
#include <superint/supermatrix.hpp>

namespace superint
{

struct LieGenerator {
    std::string name;
    Parity parity = Parity::even;
    friend bool operator==(const LieGenerator &, const LieGenerator &) = default;
};

using LieVector = std::vector<Rational>;

// Finite-dimensional Lie superalgebra given by structure constants c[i][j] = [e_i, e_j].
class LieSuperAlgebra
{
public:
    using Table = std::vector<std::vector<LieVector>>;

    LieSuperAlgebra() = default;
    // Full table, taken as is (validate() reports violations).
    LieSuperAlgebra(std::vector<LieGenerator> basis, Table table);

    // Listed brackets only; for each listed (i, j) whose mirror (j, i) is not listed the
    // mirror is filled in by graded antisymmetry. Unlisted pairs are zero.
    static LieSuperAlgebra from_brackets(std::vector<LieGenerator> basis,
                                         const std::map<std::pair<unsigned, unsigned>, LieVector> &brackets);

    unsigned dim() const noexcept
    {
        return static_cast<unsigned>(m_basis.size());
    }
    const std::vector<LieGenerator> &basis() const noexcept
    {
        return m_basis;
    }
    const Table &table() const noexcept
    {
        return m_table;
    }
    const LieVector &bracket_basis(unsigned i, unsigned j) const
    {
        return m_table.at(i).at(j);
    }
    LieVector bracket(const LieVector &x, const LieVector &y) const;

    LieVector unit_vector(unsigned i) const;
    // Parity of a homogeneous vector (zero counts as even); nullopt when mixed.
    std::optional<Parity> parity(const LieVector &x) const;

    // Basis indices in graded order: even generators first, then odd, each in index order.
    std::vector<unsigned> graded_order() const;
    unsigned even_dim() const;
    unsigned odd_dim() const;

    std::optional<unsigned> index_of(const std::string &name) const;

    friend bool operator==(const LieSuperAlgebra &, const LieSuperAlgebra &) = default;

private:
    std::vector<LieGenerator> m_basis;
    Table m_table;
};

struct LieValidation {
    bool ok = true;
    std::string failure; // first violated identity
};

// Parity additivity, graded antisymmetry, graded Jacobi on all basis triples.
LieValidation validate(const LieSuperAlgebra &g);

// Scalar supermatrices (entries in Lambda_0).
using ScalarSuperMatrix = GrassmannMatrix;

// Matrix of y -> [x, y] in the graded basis order (columns are images). x must be homogeneous.
ScalarSuperMatrix ad(const LieSuperAlgebra &g, const LieVector &x);

// Rational value of a supertrace of a scalar supermatrix.
Rational scalar_supertrace(const ScalarSuperMatrix &m);

struct SubalgebraSpec {
    std::vector<unsigned> span; // basis indices spanning h

    // Complement indices in graded order.
    std::vector<unsigned> complement(const LieSuperAlgebra &g) const;
};

// Throws StructuralError when the span is not closed under the bracket.
void check_subalgebra(const LieSuperAlgebra &g, const SubalgebraSpec &h);

// ad(x) modulo h on the complement basis (graded order). x must lie in h.
ScalarSuperMatrix quotient_action(const LieSuperAlgebra &g, const SubalgebraSpec &h, const LieVector &x);

struct UnimodularityVerdict {
    bool unimodular = true;
    std::optional<unsigned> witness; // basis index of an element with nonzero supertrace
    Rational supertrace{0};
    // The criterion is infinitesimal and decides the question for connected H.
    bool connected_group_criterion = true;

    std::string str(const LieSuperAlgebra &g) const;
};

UnimodularityVerdict unimodularity_check(const LieSuperAlgebra &g, const SubalgebraSpec &h);

// New basis f_i = sum_a p(a, i) e_a. p must be invertible with homogeneous columns; f_i takes
// the parity of its column.
LieSuperAlgebra change_basis(const LieSuperAlgebra &g, const RationalMatrix &p,
                             std::vector<std::string> names = {});

// Adapted basis for the span of homogeneous vectors: the subalgebra comes first, the
// complement is completed with standard basis vectors. Returns the new algebra, the change
// matrix used and the subalgebra indices.
struct AdaptedBasis {
    LieSuperAlgebra algebra;
    RationalMatrix change;
    SubalgebraSpec h;
};
AdaptedBasis adapt_basis(const LieSuperAlgebra &g, const std::vector<LieVector> &span);

// Built-ins.
LieSuperAlgebra abelian_algebra(const std::vector<LieGenerator> &basis);
// gl(p|q) with basis E_ij (row-major, even generators first), bracket = graded commutator.
LieSuperAlgebra general_linear(unsigned p, unsigned q);

} // namespace superint

#endif
