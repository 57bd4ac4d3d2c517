#ifndef SUPERINT_SUPERGROUP_HPP
#define SUPERINT_SUPERGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include <superint/berezin.hpp>
#include <superint/lie_super.hpp>
#include <superint/superdomain.hpp>

namespace superint
{

// Monomials x^e xi^alpha with min_exponent <= e_i and sum of positive e_i <= max_degree.
struct DensityAnsatz {
    int max_degree = 4;
    int min_exponent = 0;
};

// Supergroup given on a single global chart.
struct SuperGroupChart {
    std::string name;
    SuperDomainShape shape;
    SuperMorphism mul; // G x G -> G
    std::vector<Rational> unit;
    SuperMorphism inv;
    // One Lie algebra generator name per coordinate (even coordinates first).
    std::vector<std::string> generator_names;
    // Ansatz under which invariant densities are sought; a negative min_exponent declares
    // a Laurent prefactor such as a^-1.
    DensityAnsatz declared_ansatz;
    // Generator i is scale[i] times the coordinate direction i at the unit (empty: all 1).
    std::vector<Rational> generator_scale;
};

SuperMorphism unit_morphism(const SuperGroupChart &g, const SuperDomainShape &source);

struct GroupLawReport {
    bool associative = false;
    bool left_unit = false, right_unit = false;
    bool left_inverse = false, right_inverse = false;
    bool ok() const noexcept
    {
        return associative && left_unit && right_unit && left_inverse && right_inverse;
    }
};

GroupLawReport validate_group_laws(const SuperGroupChart &g);

// Structure constants of the left-invariant vector fields at the unit.
LieSuperAlgebra group_lie_algebra(const SuperGroupChart &g);

// Action G x X -> X (group_first) or X x G -> X.
struct GroupAction {
    SuperGroupChart group;
    SuperDomainShape space;
    SuperMorphism act;
    bool group_first = true;
};

enum class Side { left, right };

GroupAction translation_action(const SuperGroupChart &g, Side side);

// x -> a.x (or x.a) for the generalized point a whose coordinates are the even parameters
// and auxiliary odd generators of the source.
SuperMorphism generalized_translation(const GroupAction &action);

// Function on X viewed on X with parameters appended.
SuperFunction extend_to(const SuperFunction &f, const SuperDomainShape &shape);

bool is_invariant(const GroupAction &action, const BerezinSection &omega);

struct InvariantDensityResult {
    std::vector<BerezinSection> basis;
    unsigned dimension() const noexcept
    {
        return static_cast<unsigned>(basis.size());
    }
};

// Throws InconclusiveError when no invariant density exists within the ansatz.
InvariantDensityResult solve_invariant_density(const GroupAction &action, const DensityAnsatz &ansatz);
InvariantDensityResult solve_invariant_density(const SuperGroupChart &g, Side side);

// Closed subgroup H given by its own chart and an embedding H -> G.
struct SubgroupSpec {
    SuperGroupChart group;
    SuperMorphism embedding;
};

// mul_G o (i x i) == i o mul_H
bool embedding_is_homomorphism(const SuperGroupChart &g, const SubgroupSpec &h);

// (h, x) -> i(h) x i(h)^-1 on H x G.
SuperMorphism conjugation(const SuperGroupChart &g, const SubgroupSpec &h);

// Matrix of Ad_h on g (rows: source coordinates of G) as functions on H.
FunctionMatrix adjoint_matrix(const SuperGroupChart &g, const SubgroupSpec &h);

struct ModularBerezinians {
    SuperFunction ber_ad_h; // Ber(Ad_h restricted to h)
    SuperFunction ber_ad_u; // Ber(Ad_h on the full algebra)
    SuperFunction ratio() const;
};

ModularBerezinians modular_berezinian(const SuperGroupChart &g, const SubgroupSpec &h);

// Chart of G/H: a section t: U -> G, the trivialization tau = mul o (t x i): U x H -> G, and
// a density on U.
struct QuotientChartData {
    SuperDomainShape base;
    SuperMorphism section;
    SuperMorphism trivialization;
    BerezinSection omega_base;

    static QuotientChartData make(const SuperGroupChart &g, const SubgroupSpec &h, SuperMorphism section,
                                  BerezinSection omega_base);
};

struct FubiniSetup {
    std::string name;
    SuperGroupChart group;
    SubgroupSpec subgroup;
    QuotientChartData chart;
    SuperFunction f; // on G
    IntegrationBackend group_backend, base_backend, fibre_backend;
};

struct FubiniReport {
    Scalar lhs, rhs;
    int sign = 1;             // (-1)^{dim h_1 . dim g/h}
    int fibre_sign = 1;       // (-1)^{(m+n) q} from the chart and fibre dimensions
    bool normalized = false;  // tau^* omega_G == omega_{G/H} (x) omega_H
    std::optional<Rational> discrepancy;
    bool pass = false;
};

FubiniReport fubini_check(const FubiniSetup &setup);

struct ProductSetup {
    std::string name;
    SuperGroupChart group;
    SubgroupSpec m, h;
    SuperFunction f; // on U
    IntegrationBackend group_backend, product_backend;
};

struct ProductReport {
    Scalar lhs, rhs;
    SuperFunction ratio; // Ber(Ad_h) / Ber(Ad_u) on H
    Rational kappa{0};   // m^* omega_U = kappa . ratio . (omega_M (x) omega_H)
    bool proportional = false;
    bool pass = false;
};

// (m, h) -> i_M(m) i_H(h) on M x H.
SuperMorphism product_map(const SuperGroupChart &g, const SubgroupSpec &m, const SubgroupSpec &h);

ProductReport product_formula_check(const ProductSetup &setup);

// Built-in groups.
SuperGroupChart translation_group(unsigned p, unsigned q);
SuperGroupChart super_heisenberg();
SuperGroupChart super_ax_plus_b();
SuperGroupChart multiplicative_group();
SuperGroupChart gl11_chart();

// Built-in subgroups.
SubgroupSpec r11_odd_factor();
SubgroupSpec heisenberg_center();
SubgroupSpec ax_plus_b_even_subgroup();
SubgroupSpec ax_plus_b_odd_subgroup();

// Built-in verification setups.
FubiniSetup fubini_r11();
FubiniSetup fubini_heisenberg();
FubiniSetup fubini_ax_plus_b();
ProductSetup product_ax_plus_b(bool odd_first);

// Action of G on a chart of G/H together with h, for comparing the Lie algebra verdict with
// the existence of an invariant density on the quotient.
struct QuotientExample {
    std::string name;
    GroupAction action;
    SubalgebraSpec h;
    DensityAnsatz ansatz;
};

std::vector<QuotientExample> quotient_examples();

} // namespace superint

#endif
