#pragma once

#include "logloc/locus_class.hpp"

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace logloc::eq {

/// A line-bundle-type summand: equivariant Euler class weight * t + psi_coefficient * psi.
struct KSummand {
    std::string label;
    Rational weight = 0;
    Rational psi_coefficient = 0;
    std::string psi_marker;  // empty when no psi term
    int sign = +1;

    KSummand negated() const;
    auto key() const { return std::tie(label, weight, psi_coefficient, psi_marker); }
};

/// Formal signed multiset of summands; equality cancels (+,-) pairs.
class KLedger {
public:
    KLedger() = default;
    KLedger(std::initializer_list<KSummand> summands);

    void add(KSummand s);
    void add(const KLedger& other);
    void subtract(const KLedger& other);
    KLedger negated() const;

    const std::vector<KSummand>& summands() const { return items_; }
    std::size_t size() const { return items_.size(); }

    /// Net multiplicity of every summand key; zero entries dropped.
    std::map<std::tuple<std::string, Rational, Rational, std::string>, int> canonical() const;

    friend KLedger operator+(KLedger a, const KLedger& b)
    {
        a.add(b);
        return a;
    }
    friend KLedger operator-(KLedger a, const KLedger& b)
    {
        a.subtract(b);
        return a;
    }
    friend bool operator==(const KLedger& a, const KLedger& b) { return a.canonical() == b.canonical(); }

private:
    std::vector<KSummand> items_;
};

/// Product of positive summand classes over negative ones, expanded up to psi^truncation.
/// With moving_only, weight-zero summands are dropped as part of the fixed part.
LocusClass euler_class(const KLedger& ledger, bool moving_only, int truncation = 1);

/// The tangent-of-divisor summand removed once per node over the divisor.
KSummand divisor_tangent(const Rational& weight = 0);

/// glued == t1 + t2 - k * T_D + node_terms.
bool ledger_glue_check(const KLedger& t1, const KLedger& t2, int k, const KLedger& node_terms, const KLedger& glued,
                       const KSummand& td = divisor_tangent());

/// A glued configuration built from the normalization sequence of the two sides.
struct GlueInstance {
    KLedger t1;
    KLedger t2;
    int k = 0;
    KLedger node_terms;
    KLedger glued;
    KSummand td;
};

GlueInstance random_glue_instance(std::mt19937_64& rng, int k);

/// Breaks one ingredient of a correct instance (drops a T_D, loses a node term, or shifts a weight).
GlueInstance perturb_glue_instance(const GlueInstance& inst, std::mt19937_64& rng);

}  // namespace logloc::eq
