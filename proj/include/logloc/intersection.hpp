#pragma once

#include "logloc/rational.hpp"

#include <vector>

namespace logloc::eq {

/// Genus-zero descendant integral of psi_1^{a_1} ... psi_n^{a_n}; requires n >= 3.
Rational psi_integral_genus0(const std::vector<int>& exponents, int n);

}  // namespace logloc::eq
