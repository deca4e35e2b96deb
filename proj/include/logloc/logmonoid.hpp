#pragma once

#include "logloc/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace logloc::logmonoid {

/// Root of unity exp(2 pi i q), stored as q in [0,1) in lowest terms.
class UnitRoot {
public:
    UnitRoot() = default;
    explicit UnitRoot(const Rational& q);

    static UnitRoot identity() { return UnitRoot(); }

    const Rational& phase() const { return q_; }
    /// Smallest n > 0 with u^n = 1.
    Integer order() const { return denominator_of(q_); }
    bool is_identity() const { return q_ == 0; }

    UnitRoot inverse() const;
    UnitRoot pow(std::int64_t n) const;

    friend UnitRoot operator*(const UnitRoot& a, const UnitRoot& b);
    friend bool operator==(const UnitRoot& a, const UnitRoot& b) { return a.q_ == b.q_; }
    friend bool operator<(const UnitRoot& a, const UnitRoot& b) { return a.q_ < b.q_; }

private:
    Rational q_{0};
};

using NatMatrix = std::vector<std::vector<std::uint64_t>>;

/// Homomorphism of free monoids N^source -> N^target, acting on column vectors:
/// entry (i, j) is the coefficient of target generator i in the image of source generator j.
class CharHom {
public:
    CharHom(std::size_t target_rank, std::size_t source_rank);
    explicit CharHom(NatMatrix entries, std::size_t source_rank = 0);

    static CharHom identity(std::size_t rank);

    std::size_t target_rank() const { return target_; }
    std::size_t source_rank() const { return source_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return entries_[i][j]; }
    const NatMatrix& entries() const { return entries_; }

    /// (a * b) is "a after b".
    friend CharHom operator*(const CharHom& a, const CharHom& b);
    friend bool operator==(const CharHom& a, const CharHom& b) = default;

private:
    std::size_t target_;
    std::size_t source_;
    NatMatrix entries_;
};

/// Contact data of a map of log points: for each target node i a block of
/// contact orders, the twist d_i, and satellites l_ij = d_i / contact_ij.
class ContactMatrix {
public:
    ContactMatrix(std::vector<std::vector<std::uint64_t>> blocks, std::vector<std::uint64_t> twists);

    std::size_t target_rank() const { return blocks_.size(); }
    std::size_t source_rank() const;
    const std::vector<std::vector<std::uint64_t>>& blocks() const { return blocks_; }
    const std::vector<std::uint64_t>& twists() const { return twists_; }
    std::uint64_t satellite(std::size_t i, std::size_t j) const { return twists_[i] / blocks_[i][j]; }

    /// The target x source matrix of the characteristic map.
    CharHom characteristic() const;

    friend bool operator==(const ContactMatrix&, const ContactMatrix&) = default;

private:
    std::vector<std::vector<std::uint64_t>> blocks_;
    std::vector<std::uint64_t> twists_;
};

/// Characteristic data plus one unit per source generator, flattened in block order.
class LogHom {
public:
    LogHom(ContactMatrix contacts, std::vector<UnitRoot> units);

    const ContactMatrix& contacts() const { return contacts_; }
    const std::vector<UnitRoot>& units() const { return units_; }
    CharHom characteristic() const { return contacts_.characteristic(); }

private:
    ContactMatrix contacts_;
    std::vector<UnitRoot> units_;
};

bool is_minimal(const ContactMatrix& cm);

struct MadeDiagonal {
    CharHom diag;
    CharHom proj;
};

/// Splits the characteristic map as proj * diag with diag square diagonal.
MadeDiagonal factor_made_diagonal(const ContactMatrix& cm);

/// Order of {v : v^c = 1 for all c}; for an empty list the twist d is returned.
std::uint64_t log_automorphism_order(const std::vector<std::uint64_t>& contact_orders, std::uint64_t d);

/// prod(alpha) / lcm(alpha).
Integer count_enhancements(const std::vector<std::uint64_t>& alpha);

/// One q-vector per orbit, each the lexicographically smallest member, in increasing order.
std::vector<std::vector<UnitRoot>> enumerate_enhancements(const std::vector<std::uint64_t>& alpha);

std::uint64_t lcm_of(const std::vector<std::uint64_t>& values);

}  // namespace logloc::logmonoid
