#pragma once

#include "logloc/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace logloc::splitloci {

/// Genus, interior marks, contact profile at the divisor and degree of a map to (P^1, infinity).
/// Relative marks are named x1..xh in contact order.
struct DiscreteData {
    int genus = 0;
    int degree = 0;
    std::vector<int> contact;
    std::vector<std::string> marks;

    void validate() const;
    std::vector<std::string> relative_labels() const;
    /// 2g - 2 + degree + len(contact): simple branch points of a generic cover.
    int branch_points() const;
};

/// Default interior mark names p1..pm.
std::vector<std::string> default_marks(int m);

/// Connected component of the curve mapping to the base target; its nodes are edges to the divisor.
struct BasePiece {
    int genus = 0;
    std::vector<int> nodes;
    std::vector<std::string> marks;
    friend bool operator==(const BasePiece&, const BasePiece&) = default;
};

/// Connected component of the curve mapping to the bubble.
struct RubberPiece {
    int genus = 0;
    std::vector<int> nodes;
    std::vector<int> contacts;  // indices into the contact profile
    std::vector<std::string> marks;
    friend bool operator==(const RubberPiece&, const RubberPiece&) = default;
};

/// A splitting of the discrete data across the first bubble, up to relabeling of nodes with equal contact.
struct SplitData {
    std::vector<int> alpha;  // non-decreasing, one entry per node over the divisor
    int g1 = 0;
    int g2 = 0;
    std::vector<std::string> s1;
    std::vector<std::string> s2;
    std::uint64_t d = 1;  // lcm(alpha)
    int deg1 = 0;
    std::vector<BasePiece> base;
    std::vector<RubberPiece> rubber;
    /// Number of node labelings in the class of this splitting.
    std::uint64_t multiplicity = 1;

    int k() const { return static_cast<int>(alpha.size()); }
    friend bool operator==(const SplitData&, const SplitData&) = default;
};

struct SplitOptions {
    /// Allow disconnected base and rubber sides; genera then become arithmetic genera.
    bool disconnected_pieces = true;
    int max_degree = 7;
    std::size_t max_splittings = 2'000'000;
};

std::vector<SplitData> enumerate_splittings(const DiscreteData& gamma, const SplitOptions& opts = {});

/// Invokes visit on each splitting in canonical order without retaining the list.
void for_each_splitting(const DiscreteData& gamma, const SplitOptions& opts, const std::function<void(const SplitData&)>& visit);

/// Order of the group of alpha-preserving bijections of the nodes.
std::uint64_t aut_order(const SplitData& sd);
std::uint64_t multiset_aut_order(const std::vector<int>& parts);

/// A rubber piece that is a bare cylinder: genus 0, no marks, one node, one contact.
bool is_trivial_cylinder(const RubberPiece& piece);
/// The rubber side has finitely many automorphisms unless every piece is a trivial cylinder.
bool is_stable_rubber(const SplitData& sd);

struct LocusLabel {
    enum class Kind { simple, composite };
    Kind kind = Kind::simple;
    std::shared_ptr<const SplitData> split;
    std::size_t split_index = 0;
    std::size_t enhancement = 0;

    bool is_simple() const { return kind == Kind::simple; }
};

std::vector<LocusLabel> locus_labels(const DiscreteData& gamma, const SplitOptions& opts = {});

}  // namespace logloc::splitloci
