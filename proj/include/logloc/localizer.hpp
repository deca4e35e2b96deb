#pragma once

#include "logloc/eq_scalar.hpp"
#include "logloc/locus_class.hpp"
#include "logloc/logmonoid.hpp"
#include "logloc/splitloci.hpp"

#include <functional>
#include <vector>

namespace logloc::localizer {

/// Torus weights on (P^1, infinity), in units of t.
struct TargetWeights {
    /// Log tangent bundle T(-log infinity) at 0 and at infinity.
    static constexpr int log_tangent_at_zero = 1;
    static constexpr int log_tangent_at_infinity = 0;
    /// Normal bundle of the divisor at infinity; the w of the node line bundle.
    static constexpr int divisor_normal = -1;
};

/// A contracted (or unstable) vertex over 0 with edges running to infinity.
struct StarVertex {
    int genus = 0;
    int marks = 0;
    std::vector<int> edges;
};

/// Fixed-point graph over 0 and infinity: one star per connected component.
struct FixedGraph {
    std::vector<StarVertex> vertices;
};

/// e^e / (e! t^e): inverse Euler class of the moving sections along a degree-e edge.
eq::EqScalar edge_factor(int e);

/// Integral of prod 1/(t/e_i - psi_i) over the vertex moduli, with the unstable conventions
/// for one or two special points.
eq::EqScalar vertex_integral(const StarVertex& v);

/// Inverse Euler class of the normal bundle contributed by a star: edges, edge automorphisms,
/// node terms and the vertex integral.
eq::EqScalar star_contribution(const StarVertex& v);

/// e^T of the virtual normal bundle, as a psi-constant class.
eq::LocusClass simple_locus_euler(const FixedGraph& graph, int truncation = 0);

/// Pullback of prod_j (1 + H - lambda_j t) along the branch morphism, restricted to a locus
/// with k branch points at 0: prod_j (1 + (k - lambda_j) t).
struct BranchIntegrand {
    std::vector<Rational> lambda;

    static BranchIntegrand uniform(int branch_points) { return BranchIntegrand{std::vector<Rational>(static_cast<std::size_t>(branch_points), 0)}; }
    eq::EqScalar restrict_to(int branch_points_at_zero) const;
};

struct LocusContribution {
    splitloci::LocusLabel label;
    /// Unit representatives of the enhancements grouped into this contribution.
    std::vector<std::vector<logmonoid::UnitRoot>> enhancements;
    Rational numerator_weight = 1;
    /// (w - psi)/d for composite loci, 1 for the simple locus.
    eq::LocusClass node_factor;
    /// Euler class of the normal bundle of the base side (or of the whole simple locus).
    eq::LocusClass normal_factor;
    /// node_factor * normal_factor.
    eq::LocusClass denominator;
    eq::LocusClass payload;
    /// Dimension of the rubber moduli; the contribution pairs psi^rubber_dim against it.
    int rubber_dim = 0;
    /// Top power of the target psi class integrated over the rubber moduli.
    Rational rubber_integral = 1;
    int branch_points_at_zero = 0;

    bool is_composite() const { return !label.is_simple(); }
};

struct AssembleOptions {
    splitloci::SplitOptions split;
    /// Empty means the uniform integrand with r factors.
    std::vector<Rational> lambda;
};

/// Simple contribution first, then one contribution per splitting in canonical order.
/// Each composite contribution groups the prod(alpha)/d enhancement labels of its splitting.
std::vector<LocusContribution> assemble_contributions(const splitloci::DiscreteData& gamma, const AssembleOptions& opts = {});

/// Streams composite contributions without retaining them.
void for_each_composite(const splitloci::DiscreteData& gamma, const AssembleOptions& opts,
                        const std::function<void(const LocusContribution&)>& visit);

/// One contribution per enhancement label, each with numerator multiplicity / Aut.
std::vector<LocusContribution> expand_enhancements(const LocusContribution& grouped);

/// numerator * 1/((w - psi)/d) agrees with prod(alpha) * multiplicity / Aut * 1/(w - psi),
/// where w - psi is the Euler class of the pulled-back line bundle and equals d * (w - psi)/d.
bool pushforward_check(const LocusContribution& contrib);

/// [psi^rubber_dim] (numerator * payload / denominator) * rubber_integral.
eq::EqScalar evaluate_contribution(const LocusContribution& contrib);

using Evaluator = std::function<eq::EqScalar(const LocusContribution&)>;

struct TotalCheck {
    eq::EqScalar total;
    bool constant = false;
};

TotalCheck localization_total(const std::vector<LocusContribution>& contribs, const Evaluator& evaluator = evaluate_contribution);

bool t_independence_check(const std::vector<LocusContribution>& contribs, const Evaluator& evaluator = evaluate_contribution);

/// Genus-zero Hurwitz number with profile alpha over infinity, via the psi-integral closed form.
Rational hurwitz_genus0(const std::vector<int>& alpha, int max_degree = 20);

/// Connected genus-zero double Hurwitz number with labeled preimages on both sides:
/// |Aut alpha| |Aut beta| / d! * #{(sigma, tau_1..tau_r) : sigma of type alpha, product of type beta, transitive}.
Rational labeled_double_hurwitz(const std::vector<int>& alpha, const std::vector<int>& beta);

struct InvariantRequest {
    splitloci::DiscreteData gamma;
    std::vector<Rational> lambda;
    splitloci::SplitOptions split;
};

struct HurwitzResult {
    Rational value;
    eq::EqScalar localization_total;
    Rational localization_value;
    bool t_independent = false;
    std::vector<LocusContribution> contributions;
    std::vector<eq::EqScalar> evaluated;
};

HurwitzResult compute_invariant(const InvariantRequest& request);

}  // namespace logloc::localizer
