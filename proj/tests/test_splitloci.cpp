#include "logloc/errors.hpp"
#include "logloc/splitloci.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

using namespace logloc;
using namespace logloc::splitloci;

namespace {

// Test-only brute force: every labeled configuration built from raw functions, then grouped
// by the orbit of alpha-preserving node permutations.
using BaseEnc = std::tuple<int, std::set<std::string>, std::set<int>>;
using RubberEnc = std::tuple<int, std::set<std::string>, std::set<int>, std::set<int>>;
using Encoding = std::pair<std::set<BaseEnc>, std::set<RubberEnc>>;

Encoding permuted(const Encoding& e, const std::vector<int>& perm)
{
    auto move = [&](const std::set<int>& nodes) {
        std::set<int> out;
        for (int n : nodes) out.insert(perm[static_cast<std::size_t>(n)]);
        return out;
    };
    Encoding out;
    for (const auto& [g, m, n] : e.first) out.first.insert({g, m, move(n)});
    for (const auto& [g, m, n, c] : e.second) out.second.insert({g, m, move(n), c});
    return out;
}

Encoding canonical(const Encoding& e, const std::vector<int>& alpha)
{
    std::vector<int> perm(alpha.size());
    std::iota(perm.begin(), perm.end(), 0);
    Encoding best = e;
    do {
        bool preserves = true;
        for (std::size_t i = 0; i < perm.size(); ++i) preserves = preserves && alpha[i] == alpha[static_cast<std::size_t>(perm[i])];
        if (preserves) best = std::min(best, permuted(e, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Encoding encode(const SplitData& sd)
{
    Encoding e;
    for (const auto& b : sd.base)
        e.first.insert({b.genus, {b.marks.begin(), b.marks.end()}, {b.nodes.begin(), b.nodes.end()}});
    for (const auto& r : sd.rubber)
        e.second.insert({r.genus, {r.marks.begin(), r.marks.end()}, {r.nodes.begin(), r.nodes.end()}, {r.contacts.begin(), r.contacts.end()}});
    return e;
}

/// All functions {0..n-1} -> {0..n-1}, collected as unordered set partitions.
std::set<std::vector<std::set<int>>> all_partitions(int n, bool connected_only)
{
    std::set<std::vector<std::set<int>>> out;
    if (connected_only) {
        std::set<int> all;
        for (int i = 0; i < n; ++i) all.insert(i);
        out.insert({all});
        return out;
    }
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::map<int, std::set<int>> blocks;
        for (int i = 0; i < n; ++i) blocks[f[static_cast<std::size_t>(i)]].insert(i);
        std::vector<std::set<int>> p;
        for (auto& [k, v] : blocks) p.push_back(v);
        std::sort(p.begin(), p.end());
        out.insert(p);
        int i = 0;
        while (i < n && ++f[static_cast<std::size_t>(i)] == n) f[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return out;
}

std::vector<std::vector<int>> all_functions(int n, int range)
{
    std::vector<std::vector<int>> out;
    if (range == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (;;) {
        out.push_back(f);
        int i = 0;
        while (i < n && ++f[static_cast<std::size_t>(i)] == range) f[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return out;
}

bool connected(int p, int q, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(p + q));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(p + b);
        adj[static_cast<std::size_t>(p + b)].push_back(a);
    }
    std::vector<bool> seen(static_cast<std::size_t>(p + q), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == p + q;
}

struct BruteClass {
    std::vector<int> alpha;
    std::uint64_t labeled = 0;
};

std::map<std::pair<std::vector<int>, Encoding>, std::uint64_t> brute_force(const DiscreteData& gamma, bool connected_only)
{
    std::map<std::pair<std::vector<int>, Encoding>, std::uint64_t> classes;
    const int h = static_cast<int>(gamma.contact.size());
    const int m = static_cast<int>(gamma.marks.size());
    std::set<std::vector<int>> alphas;
    for (int k = 1; k <= gamma.degree; ++k)
        for (const auto& f : all_functions(k, gamma.degree)) {
            std::vector<int> a;
            for (int x : f) a.push_back(x + 1);
            if (std::accumulate(a.begin(), a.end(), 0) != gamma.degree) continue;
            std::sort(a.begin(), a.end());
            alphas.insert(a);
        }
    for (const auto& alpha : alphas) {
        const int k = static_cast<int>(alpha.size());
        std::set<Encoding> labeled;
        for (const auto& Q : all_partitions(h, connected_only)) {
            const int q = static_cast<int>(Q.size());
            for (const auto& rubber_of : all_functions(k, q)) {
                bool balanced = true;
                for (int j = 0; j < q; ++j) {
                    int in = 0, out = 0;
                    for (int i = 0; i < k; ++i)
                        if (rubber_of[static_cast<std::size_t>(i)] == j) in += alpha[static_cast<std::size_t>(i)];
                    for (int c : Q[static_cast<std::size_t>(j)]) out += gamma.contact[static_cast<std::size_t>(c)];
                    balanced = balanced && in == out;
                }
                if (!balanced) continue;
                for (const auto& P : all_partitions(k, connected_only)) {
                    const int p = static_cast<int>(P.size());
                    const int loops = k - p - q + 1;
                    if (loops < 0 || loops > gamma.genus) continue;
                    std::vector<std::pair<int, int>> edges;
                    for (int b = 0; b < p; ++b)
                        for (int n : P[static_cast<std::size_t>(b)]) edges.emplace_back(b, rubber_of[static_cast<std::size_t>(n)]);
                    if (!connected(p, q, edges)) continue;
                    for (const auto& genera : all_functions(p + q, gamma.genus - loops + 1)) {
                        if (std::accumulate(genera.begin(), genera.end(), 0) != gamma.genus - loops) continue;
                        for (const auto& mark_of : all_functions(m, p + q)) {
                            Encoding e;
                            bool all_trivial = true;
                            for (int b = 0; b < p; ++b) {
                                std::set<std::string> marks;
                                for (int i = 0; i < m; ++i)
                                    if (mark_of[static_cast<std::size_t>(i)] == b) marks.insert(gamma.marks[static_cast<std::size_t>(i)]);
                                e.first.insert({genera[static_cast<std::size_t>(b)], marks, P[static_cast<std::size_t>(b)]});
                            }
                            for (int j = 0; j < q; ++j) {
                                std::set<std::string> marks;
                                std::set<int> nodes;
                                for (int i = 0; i < m; ++i)
                                    if (mark_of[static_cast<std::size_t>(i)] == p + j) marks.insert(gamma.marks[static_cast<std::size_t>(i)]);
                                for (int i = 0; i < k; ++i)
                                    if (rubber_of[static_cast<std::size_t>(i)] == j) nodes.insert(i);
                                const int g = genera[static_cast<std::size_t>(p + j)];
                                all_trivial = all_trivial && g == 0 && marks.empty() && nodes.size() == 1 && Q[static_cast<std::size_t>(j)].size() == 1;
                                e.second.insert({g, marks, nodes, Q[static_cast<std::size_t>(j)]});
                            }
                            if (!all_trivial) labeled.insert(e);
                        }
                    }
                }
            }
        }
        for (const auto& e : labeled) ++classes[{alpha, canonical(e, alpha)}];
    }
    return classes;
}

void compare_with_brute_force(const DiscreteData& gamma, bool connected_only)
{
    SplitOptions opts;
    opts.disconnected_pieces = !connected_only;
    auto splits = enumerate_splittings(gamma, opts);
    auto brute = brute_force(gamma, connected_only);
    CHECK(splits.size() == brute.size());
    std::set<std::pair<std::vector<int>, Encoding>> seen;
    for (const auto& sd : splits) {
        auto key = std::make_pair(sd.alpha, canonical(encode(sd), sd.alpha));
        CHECK(seen.insert(key).second);
        auto it = brute.find(key);
        REQUIRE(it != brute.end());
        CHECK(it->second == sd.multiplicity);
    }
}

}  // namespace

TEST_CASE("enumerate_splittings examples")
{
    CHECK(enumerate_splittings(DiscreteData{0, 1, {1}, {}}).empty());
    CHECK(enumerate_splittings(DiscreteData{0, 0, {}, {}}).empty());

    auto two = enumerate_splittings(DiscreteData{0, 2, {2}, {}});
    REQUIRE(two.size() == 1);
    CHECK(two[0].alpha == std::vector<int>{1, 1});
    CHECK(two[0].d == 1);
    CHECK(two[0].deg1 == 2);
    CHECK(two[0].base.size() == 2);
    CHECK(two[0].rubber.size() == 1);
    CHECK(two[0].g1 == -1);
    CHECK(two[0].g2 == 0);
    CHECK(two[0].multiplicity == 1);

    SplitOptions connected;
    connected.disconnected_pieces = false;
    CHECK(enumerate_splittings(DiscreteData{0, 2, {2}, {}}, connected).empty());
    auto marked = enumerate_splittings(DiscreteData{0, 2, {2}, {"p1"}}, connected);
    REQUIRE(marked.size() == 1);
    CHECK(marked[0].alpha == std::vector<int>{2});
    CHECK(marked[0].s2 == std::vector<std::string>{"p1"});
}

TEST_CASE("discrete data validation")
{
    CHECK_THROWS_AS(enumerate_splittings(DiscreteData{0, 3, {2}, {}}), DomainError);
    CHECK_THROWS_AS(enumerate_splittings(DiscreteData{-1, 1, {1}, {}}), DomainError);
    CHECK_THROWS_AS(enumerate_splittings(DiscreteData{0, 1, {0, 1}, {}}), DomainError);
    CHECK_THROWS_AS(enumerate_splittings(DiscreteData{0, 2, {1, 1}, {"p1", "p1"}}), DomainError);
    CHECK_THROWS_AS(enumerate_splittings(DiscreteData{0, 1, {1}, {"x1"}}), DomainError);
    SplitOptions small;
    small.max_degree = 3;
    CHECK_THROWS_AS(enumerate_splittings(DiscreteData{0, 4, {4}, {}}, small), ResourceError);
    CHECK(DiscreteData{1, 3, {2, 1}, {}}.branch_points() == 5);
    CHECK(default_marks(2) == std::vector<std::string>{"p1", "p2"});
}

TEST_CASE("aut_order examples")
{
    CHECK(multiset_aut_order({2, 2, 3}) == 2);
    CHECK(multiset_aut_order({1, 1, 1}) == 6);
    CHECK(multiset_aut_order({2, 3, 5}) == 1);
    CHECK(multiset_aut_order({}) == 1);
}

TEST_CASE("trivial cylinders and rubber stability")
{
    CHECK(is_trivial_cylinder(RubberPiece{0, {0}, {0}, {}}));
    CHECK_FALSE(is_trivial_cylinder(RubberPiece{1, {0}, {0}, {}}));
    CHECK_FALSE(is_trivial_cylinder(RubberPiece{0, {0}, {0}, {"p1"}}));
    CHECK_FALSE(is_trivial_cylinder(RubberPiece{0, {0, 1}, {0}, {}}));
    for (int d = 1; d <= 5; ++d)
        for (const auto& sd : enumerate_splittings(DiscreteData{0, d, {d}, {}})) CHECK(is_stable_rubber(sd));
}

TEST_CASE("splittings agree with a brute-force classification")
{
    const std::vector<DiscreteData> cases = {
        {0, 2, {2}, {}},           {0, 2, {1, 1}, {}},        {0, 3, {3}, {}},         {0, 3, {2, 1}, {}},
        {0, 3, {1, 1, 1}, {}},     {0, 4, {4}, {}},           {0, 4, {2, 2}, {}},      {0, 4, {3, 1}, {}},
        {0, 4, {2, 1, 1}, {}},     {0, 4, {1, 1, 1, 1}, {}},  {1, 2, {2}, {}},         {1, 2, {1, 1}, {}},
        {1, 3, {3}, {}},           {1, 3, {2, 1}, {}},        {0, 2, {2}, {"p1"}},     {0, 3, {2, 1}, {"p1", "p2"}},
        {1, 2, {1, 1}, {"p1"}},
    };
    for (const auto& gamma : cases) {
        CAPTURE(gamma.genus);
        CAPTURE(gamma.degree);
        CAPTURE(gamma.contact.size());
        CAPTURE(gamma.marks.size());
        compare_with_brute_force(gamma, false);
        compare_with_brute_force(gamma, true);
    }
}

TEST_CASE("splitting invariants")
{
    const std::vector<DiscreteData> cases = {
        {0, 5, {3, 2}, {}}, {0, 5, {2, 2, 1}, {}}, {1, 4, {2, 2}, {}}, {2, 3, {2, 1}, {}}, {0, 4, {2, 2}, {"p1", "p2"}},
    };
    for (const auto& gamma : cases) {
        auto splits = enumerate_splittings(gamma);
        CHECK_FALSE(splits.empty());
        for (std::size_t i = 0; i < splits.size(); ++i) {
            const auto& sd = splits[i];
            CHECK(std::is_sorted(sd.alpha.begin(), sd.alpha.end()));
            CHECK(std::accumulate(sd.alpha.begin(), sd.alpha.end(), 0) == gamma.degree);
            CHECK(sd.deg1 == gamma.degree);
            CHECK(sd.g1 + sd.g2 + sd.k() - 1 == gamma.genus);
            CHECK(aut_order(sd) % sd.multiplicity == 0);
            CHECK(sd.s1.size() + sd.s2.size() == gamma.marks.size());
            if (i > 0) {
                const auto& prev = splits[i - 1];
                CHECK(std::make_pair(prev.k(), prev.alpha) <= std::make_pair(sd.k(), sd.alpha));
            }
            std::vector<int> contacts;
            for (const auto& r : sd.rubber) contacts.insert(contacts.end(), r.contacts.begin(), r.contacts.end());
            std::sort(contacts.begin(), contacts.end());
            CHECK(contacts.size() == gamma.contact.size());
            CHECK(std::adjacent_find(contacts.begin(), contacts.end()) == contacts.end());
        }
    }
}

TEST_CASE("mark relabeling permutes the splittings")
{
    DiscreteData ab{0, 3, {2, 1}, {"a", "b"}};
    DiscreteData ba{0, 3, {2, 1}, {"b", "a"}};
    auto x = enumerate_splittings(ab);
    auto y = enumerate_splittings(ba);
    REQUIRE(x.size() == y.size());
    std::multiset<std::pair<std::vector<int>, Encoding>> ex, ey;
    for (const auto& sd : x) ex.insert({sd.alpha, canonical(encode(sd), sd.alpha)});
    for (const auto& sd : y) ey.insert({sd.alpha, canonical(encode(sd), sd.alpha)});
    CHECK(ex == ey);
}

TEST_CASE("locus labels count enhancements")
{
    auto labels = locus_labels(DiscreteData{0, 2, {2}, {}});
    REQUIRE(labels.size() == 2);
    CHECK(labels[0].is_simple());
    CHECK_FALSE(labels[1].is_simple());
    CHECK(labels[1].split->alpha == std::vector<int>{1, 1});

    for (const auto& gamma : {DiscreteData{0, 4, {2, 2}, {}}, DiscreteData{0, 5, {5}, {}}, DiscreteData{1, 4, {4}, {}}}) {
        std::size_t expected = 1;
        for (const auto& sd : enumerate_splittings(gamma)) {
            std::uint64_t prod = 1;
            for (int a : sd.alpha) prod *= static_cast<std::uint64_t>(a);
            expected += prod / sd.d;
        }
        CHECK(locus_labels(gamma).size() == expected);
    }
}
