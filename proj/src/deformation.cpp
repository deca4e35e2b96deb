#include "logloc/deformation.hpp"

#include "logloc/errors.hpp"

#include <string>
#include <algorithm>
#include <utility>

namespace logloc::eq {

int matrix_rank(RatMatrix a)
{
    int rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[static_cast<std::size_t>(rank)]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / prow[col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * prow[c];
        }
        ++rank;
    }
    return rank;
}

namespace {

void validate(int ext1_dim, int m, int m2, const IncidenceMatrix& incidence)
{
    if (ext1_dim < 0 || m < 0 || m2 < 0) throw DomainError("def_space_dim: negative dimension");
    if (static_cast<int>(incidence.size()) != m) throw StructuralError("def_space_dim: incidence must have m rows");
    for (const auto& row : incidence)
        if (static_cast<int>(row.size()) != m2) throw StructuralError("def_space_dim: incidence must have m'' columns");
    for (int j = 0; j < m2; ++j) {
        int hits = 0;
        for (int i = 0; i < m; ++i) {
            int v = incidence[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v != 0 && v != 1) throw StructuralError("def_space_dim: incidence entries must be 0 or 1");
            hits += v;
        }
        if (hits != 1) throw StructuralError("def_space_dim: every source node lies over exactly one target node");
    }
}

}  // namespace

DefSpace def_space_dim(int ext1_dim, int m, int m2, const IncidenceMatrix& incidence, const RatMatrix& boundary)
{
    validate(ext1_dim, m, m2, incidence);
    if (static_cast<int>(boundary.size()) != m2) throw StructuralError("def_space_dim: boundary must have m'' rows");
    for (const auto& row : boundary)
        if (static_cast<int>(row.size()) != ext1_dim) throw StructuralError("def_space_dim: boundary must have ext1 columns");

    // {(x, v) : B x = D v} is the kernel of [B | -D] on Q^{ext1 + m}.
    RatMatrix stacked(static_cast<std::size_t>(m2), std::vector<Rational>(static_cast<std::size_t>(ext1_dim + m)));
    for (int r = 0; r < m2; ++r) {
        for (int c = 0; c < ext1_dim; ++c) stacked[r][c] = boundary[r][c];
        for (int i = 0; i < m; ++i) stacked[r][ext1_dim + i] = -incidence[i][r];
    }
    DefSpace out;
    out.dimension = ext1_dim + m - matrix_rank(std::move(stacked));
    out.boundary_surjective = matrix_rank(boundary) == m2;
    return out;
}

DefSpace def_space_dim(int ext1_dim, int m, int m2, const IncidenceMatrix& incidence)
{
    RatMatrix boundary(static_cast<std::size_t>(std::max(m2, 0)), std::vector<Rational>(static_cast<std::size_t>(std::max(ext1_dim, 0))));
    for (int r = 0; r < m2 && r < ext1_dim; ++r) boundary[r][r] = 1;
    return def_space_dim(ext1_dim, m, m2, incidence, boundary);
}

int aut_space_dim(int curve_aut_dim, int m)
{
    if (curve_aut_dim < 0 || m < 0) throw DomainError("aut_space_dim: negative dimension");
    return curve_aut_dim + m;
}

}  // namespace logloc::eq

namespace logloc::eq {

DimensionInstance random_dimension_instance(std::mt19937_64& rng, int max_nodes)
{
    DimensionInstance inst;
    std::uniform_int_distribution<int> target(1, max_nodes);
    inst.m = target(rng);
    std::uniform_int_distribution<int> source(inst.m, max_nodes);
    inst.m2 = source(rng);
    std::uniform_int_distribution<int> extra(0, 6);
    inst.ext1 = inst.m2 + extra(rng);
    inst.incidence.assign(static_cast<std::size_t>(inst.m), std::vector<int>(static_cast<std::size_t>(inst.m2), 0));
    std::uniform_int_distribution<int> owner(0, inst.m - 1);
    for (int j = 0; j < inst.m2; ++j) inst.incidence[static_cast<std::size_t>(owner(rng))][static_cast<std::size_t>(j)] = 1;
    std::uniform_int_distribution<int> entry(-3, 3);
    do {
        inst.boundary.assign(static_cast<std::size_t>(inst.m2), std::vector<Rational>(static_cast<std::size_t>(inst.ext1)));
        for (auto& row : inst.boundary)
            for (auto& x : row) x = entry(rng);
    } while (matrix_rank(inst.boundary) != inst.m2);
    return inst;
}

}  // namespace logloc::eq
