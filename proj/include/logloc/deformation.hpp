#pragma once

#include "logloc/rational.hpp"

#include <vector>

namespace logloc::eq {

using RatMatrix = std::vector<std::vector<Rational>>;
using IncidenceMatrix = std::vector<std::vector<int>>;

struct DefSpace {
    int dimension = 0;
    /// False when Ext^1 -> C^{m''} misses part of the target.
    bool boundary_surjective = true;
};

/// Fiber product of Ext^1 -> C^{m''} <- C^m, the right arrow given by the m x m'' incidence
/// (each target node to the sum of its source nodes). The boundary map projects onto the
/// first m'' coordinates of Ext^1.
DefSpace def_space_dim(int ext1_dim, int m, int m2, const IncidenceMatrix& incidence);

/// Same with an explicit m'' x ext1 boundary matrix.
DefSpace def_space_dim(int ext1_dim, int m, int m2, const IncidenceMatrix& incidence, const RatMatrix& boundary);

int aut_space_dim(int curve_aut_dim, int m);

/// Rank by fraction-exact Gaussian elimination.
int matrix_rank(RatMatrix a);

}  // namespace logloc::eq

#include <random>

namespace logloc::eq {

struct DimensionInstance {
    int ext1 = 0;
    int m = 0;
    int m2 = 0;
    IncidenceMatrix incidence;
    RatMatrix boundary;
};

/// Random node layout with m, m'' <= max_nodes and a random surjective boundary map.
DimensionInstance random_dimension_instance(std::mt19937_64& rng, int max_nodes = 6);

}  // namespace logloc::eq
