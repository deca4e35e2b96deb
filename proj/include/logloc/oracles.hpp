#pragma once

#include "logloc/rational.hpp"

#include <cstdint>
#include <vector>

namespace logloc::oracles {

/// Profile alpha over one point, simple branching elsewhere.
struct FactorizationSpec {
    int genus = 0;
    std::vector<int> alpha;

    int degree() const;
    /// 2g - 2 + d + len(alpha).
    int branch_points() const;
};

/// (1/d!) #{(sigma, tau_1..tau_r) : sigma of type alpha, sigma tau_1 ... tau_r = 1, transitive}.
/// Bounded to d <= 5 and genus in {0, 1}.
Rational count_factorizations(const FactorizationSpec& spec);

/// (1/d!) #{(sigma, tau_1..tau_r) : sigma of type alpha, sigma tau_1 ... tau_r of type beta, transitive},
/// r = 2g - 2 + len(alpha) + len(beta). Bounded to d <= 6.
Rational count_double_factorizations(const std::vector<int>& alpha, const std::vector<int>& beta, int genus);

/// Orbits of {(u_1..u_k) : u_i^{alpha_i} = 1} under mu_lcm, by walking every tuple.
std::uint64_t orbit_count_units(const std::vector<std::uint64_t>& alpha);

/// Same count via Burnside's lemma over the cyclic group.
Rational burnside_count_units(const std::vector<std::uint64_t>& alpha);

}  // namespace logloc::oracles
