#include "logloc/errors.hpp"
#include "logloc/localizer.hpp"
#include "logloc/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace logloc;
using namespace logloc::localizer;
using eq::EqScalar;
using splitloci::DiscreteData;

namespace {

std::vector<std::vector<int>> partitions(int n, int max_part)
{
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int p = std::min(n, max_part); p >= 1; --p)
        for (auto rest : partitions(n - p, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(rest);
        }
    return out;
}

std::vector<std::vector<int>> partitions(int n) { return partitions(n, n); }

DiscreteData profile(const std::vector<int>& c)
{
    return DiscreteData{0, std::accumulate(c.begin(), c.end(), 0), c, {}};
}

/// prod(e_i / t) * (sum e_i / t)^(n-3) for a genus-zero vertex with n >= 3 edges.
EqScalar vertex_closed_form(const std::vector<int>& edges)
{
    int prod = 1, sum = 0;
    for (int e : edges) {
        prod *= e;
        sum += e;
    }
    const int n = static_cast<int>(edges.size());
    Rational c = prod;
    for (int i = 0; i < n - 3; ++i) c *= sum;
    return EqScalar::monomial(c, -n - (n - 3));
}

const LocusContribution& find_composite(const std::vector<LocusContribution>& cs, const std::vector<int>& alpha)
{
    for (const auto& c : cs)
        if (c.is_composite() && c.label.split->alpha == alpha) return c;
    throw std::runtime_error("no composite with the requested alpha");
}

}  // namespace

TEST_CASE("edge factors")
{
    CHECK(edge_factor(1) == EqScalar::monomial(1, -1));
    CHECK(edge_factor(2) == EqScalar::monomial(2, -2));
    CHECK(edge_factor(3) == EqScalar::monomial(Rational(9, 2), -3));
    CHECK_THROWS_AS(edge_factor(0), DomainError);
}

TEST_CASE("vertex integrals")
{
    CHECK(vertex_integral(StarVertex{0, 0, {3}}) == EqScalar::monomial(Rational(1, 3), 1));
    CHECK(vertex_integral(StarVertex{0, 0, {1, 1}}) == EqScalar::monomial(Rational(1, 2), -1));
    CHECK(vertex_integral(StarVertex{0, 0, {1, 1, 1}}) == EqScalar::monomial(1, -3));
    CHECK(vertex_integral(StarVertex{0, 0, {2, 1, 1}}) == EqScalar::monomial(2, -3));
    CHECK(vertex_integral(StarVertex{0, 0, {1, 1, 1, 1}}) == EqScalar::monomial(4, -5));
    for (int d = 3; d <= 7; ++d)
        for (const auto& edges : partitions(d))
            if (edges.size() >= 3) CHECK(vertex_integral(StarVertex{0, 0, edges}) == vertex_closed_form(edges));
    CHECK_THROWS_AS(vertex_integral(StarVertex{1, 0, {1}}), UnsupportedError);
    CHECK_THROWS_AS(vertex_integral(StarVertex{0, 0, {}}), StructuralError);
}

TEST_CASE("simple locus Euler classes")
{
    CHECK(simple_locus_euler(FixedGraph{{StarVertex{0, 0, {1}}}}) == eq::LocusClass::constant(1, 0));
    CHECK(simple_locus_euler(FixedGraph{{StarVertex{0, 0, {2}}}}) == eq::LocusClass::constant(EqScalar::monomial(2, 1), 0));
    CHECK(simple_locus_euler(FixedGraph{{StarVertex{0, 0, {3}}}}) == eq::LocusClass::constant(EqScalar::monomial(2, 2), 0));
    CHECK(simple_locus_euler(FixedGraph{{StarVertex{0, 0, {1, 1}}}}) == eq::LocusClass::constant(EqScalar::monomial(2, 2), 0));
    for (int d = 1; d <= 5; ++d)
        for (const auto& c : partitions(d)) CHECK_FALSE(simple_locus_euler(FixedGraph{{StarVertex{0, 0, c}}}).coefficient(0).is_zero());
    CHECK_THROWS_AS(simple_locus_euler(FixedGraph{}), StructuralError);
}

TEST_CASE("assembly for a single contact of order two")
{
    auto cs = assemble_contributions(profile({2}));
    REQUIRE(cs.size() == 2);
    CHECK_FALSE(cs[0].is_composite());
    CHECK(cs[1].is_composite());
    CHECK(cs[1].label.split->alpha == std::vector<int>{1, 1});
    CHECK(cs[1].numerator_weight == Rational(1, 2));
    CHECK(cs[1].enhancements.size() == 1);
    CHECK(cs[1].rubber_dim == 0);
    CHECK(pushforward_check(cs[1]));
    auto total = localization_total(cs);
    CHECK(total.constant);
    CHECK(total.total == EqScalar(Rational(1, 2)));
}

TEST_CASE("assembly preconditions")
{
    CHECK_THROWS_AS(assemble_contributions(DiscreteData{1, 2, {2}, {}}), UnsupportedError);
    CHECK_THROWS_AS(assemble_contributions(DiscreteData{0, 2, {2}, {"p1"}}), UnsupportedError);
    CHECK_THROWS_AS(assemble_contributions(DiscreteData{0, 0, {}, {}}), DomainError);
    AssembleOptions wrong;
    wrong.lambda = {1, 2, 3, 4};
    CHECK_THROWS_AS(assemble_contributions(profile({2}), wrong), DomainError);
}

TEST_CASE("pushforward check on chosen splittings")
{
    auto five = assemble_contributions(profile({5}));
    auto four = assemble_contributions(profile({4}));
    for (const auto* c : {&find_composite(five, {2, 3}), &find_composite(five, {1, 1, 3}), &find_composite(four, {2, 2})}) {
        CHECK(pushforward_check(*c));
        LocusContribution tampered = *c;
        tampered.numerator_weight *= 2;
        CHECK_FALSE(pushforward_check(tampered));
    }
    CHECK(find_composite(five, {2, 3}).numerator_weight == 1);
    CHECK(find_composite(four, {2, 2}).numerator_weight == Rational(find_composite(four, {2, 2}).label.split->multiplicity * 2, 2));
    CHECK_THROWS_AS(pushforward_check(five[0]), DomainError);
}

TEST_CASE("hurwitz numbers")
{
    CHECK(hurwitz_genus0({2}) == Rational(1, 2));
    CHECK(hurwitz_genus0({1, 1}) == Rational(1, 2));
    CHECK(hurwitz_genus0({3}) == 1);
    CHECK(hurwitz_genus0({1}) == 1);
    CHECK_THROWS_AS(hurwitz_genus0({21}), ResourceError);
    CHECK_THROWS_AS(hurwitz_genus0({}), DomainError);
    for (int d = 1; d <= 5; ++d)
        for (const auto& alpha : partitions(d)) {
            CAPTURE(d);
            CHECK(hurwitz_genus0(alpha) == oracles::count_factorizations({0, alpha}));
        }
}

TEST_CASE("labeled double hurwitz numbers against the permutation oracle")
{
    for (int d = 1; d <= 5; ++d)
        for (const auto& a : partitions(d))
            for (const auto& b : partitions(d)) {
                if (a.size() + b.size() < 3 || a.size() + b.size() > 6) continue;
                const Rational aut(splitloci::multiset_aut_order(a) * splitloci::multiset_aut_order(b));
                CHECK(labeled_double_hurwitz(a, b) == aut * oracles::count_double_factorizations(a, b, 0));
            }
    CHECK_THROWS_AS(labeled_double_hurwitz({2, 2, 2, 2}, {8}), ResourceError);
    CHECK_THROWS_AS(labeled_double_hurwitz({2}, {1}), DomainError);
}

TEST_CASE("expanded enhancements reproduce the grouped value")
{
    for (const auto& c : {std::vector<int>{4}, {2, 2}, {3, 1}, {6}, {4, 2}}) {
        for (const auto& grouped : assemble_contributions(profile(c))) {
            if (!grouped.is_composite()) continue;
            auto expanded = expand_enhancements(grouped);
            std::uint64_t prod = 1;
            for (int a : grouped.label.split->alpha) prod *= static_cast<std::uint64_t>(a);
            CHECK(expanded.size() == prod / grouped.label.split->d);
            EqScalar sum = 0;
            Rational weight = 0;
            for (const auto& e : expanded) {
                sum += evaluate_contribution(e);
                weight += e.numerator_weight;
            }
            CHECK(weight == grouped.numerator_weight);
            CHECK(sum == evaluate_contribution(grouped));
        }
    }
}

TEST_CASE("localization total is constant and equals the labeled count")
{
    for (int d = 1; d <= 5; ++d)
        for (const auto& c : partitions(d)) {
            CAPTURE(d);
            auto result = compute_invariant(InvariantRequest{profile(c), {}, {}});
            CHECK(result.t_independent);
            CHECK(result.value == hurwitz_genus0(c));
            CHECK(result.localization_value == result.value);
            CHECK(result.localization_total == EqScalar(Rational(splitloci::multiset_aut_order(c)) * result.value));
            CHECK(result.evaluated.size() == result.contributions.size());
        }
}

TEST_CASE("t-independence detects a missing locus")
{
    for (const auto& c : {std::vector<int>{3}, {2, 1}, {4}, {2, 2}}) {
        auto cs = assemble_contributions(profile(c));
        CHECK(t_independence_check(cs));
        for (std::size_t drop = 1; drop < cs.size(); ++drop) {
            if (cs[drop].rubber_dim == 0 && evaluate_contribution(cs[drop]).is_constant()) continue;
            auto without = cs;
            without.erase(without.begin() + static_cast<std::ptrdiff_t>(drop));
            CHECK_FALSE(t_independence_check(without));
        }
    }
}

TEST_CASE("non-uniform insertion weights keep the total constant")
{
    AssembleOptions opts;
    opts.lambda = {Rational(1, 3), -2, 5, 0};
    auto cs = assemble_contributions(profile({3, 1}), opts);
    auto total = localization_total(cs);
    CHECK(total.constant);
    CHECK(total.total == EqScalar(hurwitz_genus0({3, 1})));
}
