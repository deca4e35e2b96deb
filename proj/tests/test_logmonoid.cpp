#include "logloc/errors.hpp"
#include "logloc/logmonoid.hpp"
#include "logloc/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace logloc;
using namespace logloc::logmonoid;

namespace {

/// Minimality by search: the characteristic map factors through a proper submonoid
/// g_1 N + ... + g_m N (some g_i > 1) iff every block entry of row i lies in g_i N.
/// Empty rows are minimal only with twist 1.
bool minimal_by_submonoid_search(const ContactMatrix& cm)
{
    for (std::size_t i = 0; i < cm.target_rank(); ++i) {
        const auto& block = cm.blocks()[i];
        if (block.empty()) {
            if (cm.twists()[i] != 1) return false;
            continue;
        }
        std::uint64_t top = 0;
        for (auto c : block) top = std::max(top, c);
        for (std::uint64_t g = 2; g <= top; ++g) {
            bool inside = true;
            for (auto c : block) inside = inside && c % g == 0;
            if (inside) return false;
        }
    }
    return true;
}

std::uint64_t roots_fixing_all(const std::vector<std::uint64_t>& contacts, std::uint64_t search)
{
    // v = exp(2 pi i j / search): v^c = 1 iff search | j c.
    std::uint64_t count = 0;
    for (std::uint64_t j = 0; j < search; ++j) {
        bool ok = true;
        for (auto c : contacts) ok = ok && (j * c) % search == 0;
        count += ok;
    }
    return count;
}

ContactMatrix random_contact_matrix(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> rows(1, 3), len(0, 3), val(1, 6);
    std::vector<std::vector<std::uint64_t>> blocks(static_cast<std::size_t>(rows(rng)));
    std::vector<std::uint64_t> twists;
    for (auto& b : blocks) {
        int n = len(rng);
        std::uint64_t l = 1;
        for (int i = 0; i < n; ++i) {
            b.push_back(static_cast<std::uint64_t>(val(rng)));
            l = std::lcm(l, b.back());
        }
        twists.push_back(l * static_cast<std::uint64_t>(val(rng) % 2 + 1));
    }
    return ContactMatrix(blocks, twists);
}

}  // namespace

TEST_CASE("unit roots form a group")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 24);
    for (int i = 0; i < 200; ++i) {
        UnitRoot a(Rational(num(rng), den(rng))), b(Rational(num(rng), den(rng))), c(Rational(num(rng), den(rng)));
        CHECK(a * a.inverse() == UnitRoot::identity());
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a.phase() >= 0);
        CHECK(a.phase() < 1);
    }
    CHECK(UnitRoot(Rational(5, 4)).phase() == Rational(1, 4));
    CHECK(UnitRoot(Rational(-1, 3)).phase() == Rational(2, 3));
    CHECK(UnitRoot(Rational(1, 6)).pow(6).is_identity());
    CHECK(UnitRoot(Rational(3, 4)).order() == 4);
}

TEST_CASE("char hom composition is the matrix product")
{
    CharHom a(NatMatrix{{1, 2}, {0, 3}});
    CharHom b(NatMatrix{{2, 0, 1}, {1, 1, 0}});
    CharHom ab = a * b;
    CHECK(ab.entries() == NatMatrix{{4, 2, 1}, {3, 3, 0}});
    CHECK(CharHom::identity(2) * a == a);
    CHECK_THROWS_AS(b * a, StructuralError);
}

TEST_CASE("contact matrix validation")
{
    CHECK_NOTHROW(ContactMatrix({{2, 3}}, {6}));
    CHECK_NOTHROW(ContactMatrix({{}, {1}}, {4, 1}));
    CHECK_THROWS_AS(ContactMatrix({{2, 3}}, {4}), StructuralError);
    CHECK_THROWS_AS(ContactMatrix({{0}}, {1}), StructuralError);
    CHECK_THROWS_AS(ContactMatrix({{1}}, {}), StructuralError);
    ContactMatrix cm({{2, 3}}, {6});
    CHECK(cm.satellite(0, 0) == 3);
    CHECK(cm.satellite(0, 1) == 2);
}

TEST_CASE("log hom units obey the satellite root condition")
{
    ContactMatrix cm({{2, 3}}, {6});
    CHECK_NOTHROW(LogHom(cm, {UnitRoot(Rational(1, 3)), UnitRoot(Rational(1, 2))}));
    CHECK_THROWS_AS(LogHom(cm, {UnitRoot(Rational(1, 2)), UnitRoot(0)}), DomainError);
    CHECK_THROWS_AS(LogHom(cm, {UnitRoot(0)}), StructuralError);
}

TEST_CASE("is_minimal examples")
{
    CHECK(is_minimal(ContactMatrix({{2, 3}}, {6})));
    CHECK(is_minimal(ContactMatrix({{1}}, {1})));
    CHECK_FALSE(is_minimal(ContactMatrix({{2, 4}}, {4})));
    CHECK(is_minimal(ContactMatrix({{}}, {1})));
    CHECK_FALSE(is_minimal(ContactMatrix({{}}, {3})));
}

TEST_CASE("is_minimal agrees with submonoid search at rank <= 2")
{
    for (std::uint64_t a = 1; a <= 8; ++a)
        for (std::uint64_t b = 1; b <= 8; ++b)
            for (std::uint64_t c = 1; c <= 6; ++c) {
                ContactMatrix two({{a, b}, {c}}, {std::lcm(a, b), c});
                CHECK(is_minimal(two) == minimal_by_submonoid_search(two));
                ContactMatrix one({{a, b, c}}, {std::lcm(std::lcm(a, b), c)});
                CHECK(is_minimal(one) == minimal_by_submonoid_search(one));
            }
}

TEST_CASE("factor_made_diagonal examples")
{
    auto f = factor_made_diagonal(ContactMatrix({{2, 3}}, {6}));
    CHECK(f.diag.entries() == NatMatrix{{2, 0}, {0, 3}});
    CHECK(f.proj.entries() == NatMatrix{{1, 1}});

    f = factor_made_diagonal(ContactMatrix({{1}}, {1}));
    CHECK(f.diag.entries() == NatMatrix{{1}});
    CHECK(f.proj.entries() == NatMatrix{{1}});

    ContactMatrix cm({{2}, {5, 7}}, {2, 35});
    f = factor_made_diagonal(cm);
    CHECK(f.diag.entries() == NatMatrix{{2, 0, 0}, {0, 5, 0}, {0, 0, 7}});
    CHECK(f.proj.entries() == NatMatrix{{1, 0, 0}, {0, 1, 1}});
    CHECK(f.proj * f.diag == cm.characteristic());
}

TEST_CASE("factor_made_diagonal round trip on random matrices")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        ContactMatrix cm = random_contact_matrix(rng);
        auto f = factor_made_diagonal(cm);
        CHECK(f.proj * f.diag == cm.characteristic());
        CHECK(f.diag.target_rank() == cm.source_rank());
        CHECK(f.diag.source_rank() == cm.source_rank());
    }
}

TEST_CASE("log_automorphism_order examples")
{
    CHECK(log_automorphism_order({2, 3}, 6) == 1);
    CHECK(log_automorphism_order({2, 4}, 4) == 2);
    CHECK(log_automorphism_order({}, 1) == 1);
    CHECK(log_automorphism_order({}, 5) == 5);
    CHECK_THROWS_AS(log_automorphism_order({2, 0}, 2), DomainError);
}

TEST_CASE("log_automorphism_order counts common roots and is 1 on minimal blocks")
{
    for (std::uint64_t a = 1; a <= 6; ++a)
        for (std::uint64_t b = 1; b <= 6; ++b)
            for (std::uint64_t c = 1; c <= 6; ++c) {
                std::vector<std::uint64_t> v{a, b, c};
                CHECK(log_automorphism_order(v, lcm_of(v)) == roots_fixing_all(v, 720));
                if (is_minimal(ContactMatrix({v}, {lcm_of(v)}))) CHECK(log_automorphism_order(v, lcm_of(v)) == 1);
            }
}

TEST_CASE("count_enhancements examples")
{
    CHECK(count_enhancements({2, 3}) == 1);
    CHECK(count_enhancements({1, 1, 1, 1}) == 1);
    CHECK(count_enhancements({2, 2}) == 2);
    CHECK(count_enhancements({2, 3, 4}) == 2);
    CHECK_THROWS_AS(count_enhancements({}), DomainError);
}

TEST_CASE("enumerate_enhancements examples")
{
    auto e = enumerate_enhancements({2, 2});
    REQUIRE(e.size() == 2);
    CHECK(e[0] == std::vector<UnitRoot>{UnitRoot(0), UnitRoot(0)});
    CHECK(e[1] == std::vector<UnitRoot>{UnitRoot(0), UnitRoot(Rational(1, 2))});
    e = enumerate_enhancements({3});
    REQUIRE(e.size() == 1);
    CHECK(e[0] == std::vector<UnitRoot>{UnitRoot(0)});
    CHECK(enumerate_enhancements({2, 3, 4}).size() == 2);
}

TEST_CASE("enhancements: counts agree with orbit enumeration for prod <= 64")
{
    std::vector<std::vector<std::uint64_t>> all;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::uint64_t min_part, std::uint64_t prod) -> void {
        if (!cur.empty()) all.push_back(cur);
        if (cur.size() == 6) return;
        for (std::uint64_t p = min_part; prod * p <= 64; ++p) {
            cur.push_back(p);
            self(self, p, prod * p);
            cur.pop_back();
        }
    };
    rec(rec, 1, 1);
    REQUIRE(all.size() > 100);
    for (const auto& alpha : all) {
        auto reps = enumerate_enhancements(alpha);
        CHECK(Integer(reps.size()) == count_enhancements(alpha));
        CHECK(reps.size() == oracles::orbit_count_units(alpha));
        for (const auto& rep : reps)
            for (std::size_t i = 0; i < rep.size(); ++i) CHECK(rep[i].pow(static_cast<std::int64_t>(alpha[i])).is_identity());
        CHECK(std::is_sorted(reps.begin(), reps.end()));
    }
}
