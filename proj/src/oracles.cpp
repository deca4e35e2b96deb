#include "logloc/oracles.hpp"

#include "logloc/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace logloc::oracles {

namespace {

constexpr int kMaxPoints = 6;
using Perm = std::array<std::uint8_t, kMaxPoints>;

struct Transposition {
    std::uint8_t a;
    std::uint8_t b;
};

/// (p * q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q, int d)
{
    Perm out{};
    for (int x = 0; x < d; ++x) out[x] = p[q[x]];
    return out;
}

Perm apply_transposition(const Perm& p, Transposition t, int d)
{
    Perm out = p;
    (void)d;
    std::swap(out[t.a], out[t.b]);  // p * (a b)
    return out;
}

std::vector<int> cycle_type(const Perm& p, int d)
{
    std::vector<int> type;
    std::array<bool, kMaxPoints> seen{};
    for (int x = 0; x < d; ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = p[y]) {
            seen[y] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::vector<Perm> all_perms(int d)
{
    Perm p{};
    for (int i = 0; i < kMaxPoints; ++i) p[i] = static_cast<std::uint8_t>(i);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));
    return out;
}

std::vector<Transposition> all_transpositions(int d)
{
    std::vector<Transposition> out;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    return out;
}

/// Point-set components, one bitmask per point.
using Components = std::array<std::uint8_t, kMaxPoints>;

Components initial_components(const Perm& sigma, int d)
{
    Components c{};
    for (int x = 0; x < d; ++x) {
        std::uint8_t mask = 0;
        int y = x;
        do {
            mask |= static_cast<std::uint8_t>(1u << y);
            y = sigma[y];
        } while (y != x);
        c[x] = mask;
    }
    return c;
}

Components merge(Components c, Transposition t, int d)
{
    if (c[t.a] & (1u << t.b)) return c;
    std::uint8_t joined = c[t.a] | c[t.b];
    for (int x = 0; x < d; ++x)
        if (joined & (1u << x)) c[x] = joined;
    return c;
}

bool transitive(const Components& c, int d) { return c[0] == static_cast<std::uint8_t>((1u << d) - 1); }

class BudgetedSearch {
public:
    explicit BudgetedSearch(std::uint64_t budget) : budget_(budget) {}
    void tick()
    {
        if (++steps_ > budget_) throw ResourceError("oracle: enumeration budget exhausted");
    }

private:
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
};

struct SingleCounter {
    int d;
    int r;
    const std::vector<Transposition>& taus;
    BudgetedSearch& budget;

    /// Remaining `left` transpositions must bring `current` to the identity.
    std::uint64_t run(const Perm& current, const Components& comp, int left)
    {
        budget.tick();
        if (left == 0) {
            for (int x = 0; x < d; ++x)
                if (current[x] != x) return 0;
            return transitive(comp, d) ? 1 : 0;
        }
        if (left == 1) {
            // The last factor is forced: current must itself be a transposition.
            int moved[2];
            int n = 0;
            for (int x = 0; x < d; ++x)
                if (current[x] != x) {
                    if (n == 2) return 0;
                    moved[n++] = x;
                }
            if (n != 2) return 0;
            Transposition t{static_cast<std::uint8_t>(moved[0]), static_cast<std::uint8_t>(moved[1])};
            return transitive(merge(comp, t, d), d) ? 1 : 0;
        }
        std::uint64_t total = 0;
        for (Transposition t : taus) total += run(apply_transposition(current, t, d), merge(comp, t, d), left - 1);
        return total;
    }
};

Perm perm_of_type(const std::vector<int>& type)
{
    Perm p{};
    for (int i = 0; i < kMaxPoints; ++i) p[i] = static_cast<std::uint8_t>(i);
    int start = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) p[start + i] = static_cast<std::uint8_t>(start + (i + 1) % len);
        start += len;
    }
    return p;
}

std::vector<int> sorted_desc(std::vector<int> v)
{
    std::sort(v.rbegin(), v.rend());
    return v;
}

void check_partition(const std::vector<int>& alpha, const char* who)
{
    if (alpha.empty()) throw DomainError(std::string(who) + ": empty partition");
    for (int a : alpha)
        if (a <= 0) throw DomainError(std::string(who) + ": parts must be positive");
}

}  // namespace

int FactorizationSpec::degree() const { return std::accumulate(alpha.begin(), alpha.end(), 0); }

int FactorizationSpec::branch_points() const
{
    return 2 * genus - 2 + degree() + static_cast<int>(alpha.size());
}

Rational count_factorizations(const FactorizationSpec& spec)
{
    check_partition(spec.alpha, "count_factorizations");
    const int d = spec.degree();
    if (d > 5) throw ResourceError("count_factorizations: degree " + std::to_string(d) + " exceeds bound 5");
    if (spec.genus < 0 || spec.genus > 1) throw ResourceError("count_factorizations: genus must be 0 or 1");
    const int r = spec.branch_points();
    if (r < 0) return 0;

    const std::vector<int> type = sorted_desc(spec.alpha);
    const auto perms = all_perms(d);
    const auto taus = all_transpositions(d);

    // Conjugation invariance: count for one sigma and scale by its class size.
    const Perm sigma = perm_of_type(type);
    std::uint64_t class_size = 0;
    std::vector<Perm> centralizer;
    for (const Perm& p : perms) {
        if (cycle_type(p, d) == type) ++class_size;
        if (compose(p, sigma, d) == compose(sigma, p, d)) centralizer.push_back(p);
    }

    BudgetedSearch budget(2'000'000'000ULL);
    SingleCounter counter{d, r, taus, budget};
    const Components start = initial_components(sigma, d);
    std::uint64_t per_sigma = 0;
    if (r == 0) {
        per_sigma = counter.run(sigma, start, 0);
    } else {
        // The centralizer of sigma permutes the choices of tau_1; count one per orbit.
        std::set<std::pair<int, int>> done;
        for (Transposition t : taus) {
            if (done.count({t.a, t.b})) continue;
            std::uint64_t orbit = 0;
            for (const Perm& c : centralizer) {
                int a = c[t.a], b = c[t.b];
                if (a > b) std::swap(a, b);
                if (done.insert({a, b}).second) ++orbit;
            }
            per_sigma += orbit * counter.run(apply_transposition(sigma, t, d), merge(start, t, d), r - 1);
        }
    }
    Integer total = Integer(class_size) * per_sigma;
    return Rational(total, factorial(static_cast<unsigned>(d)));
}

Rational count_double_factorizations(const std::vector<int>& alpha, const std::vector<int>& beta, int genus)
{
    check_partition(alpha, "count_double_factorizations");
    check_partition(beta, "count_double_factorizations");
    const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (d != std::accumulate(beta.begin(), beta.end(), 0))
        throw DomainError("count_double_factorizations: profiles of different degree");
    if (d > kMaxPoints) throw ResourceError("count_double_factorizations: degree exceeds bound 6");
    const int r = 2 * genus - 2 + static_cast<int>(alpha.size() + beta.size());
    if (r < 0) return 0;

    const std::vector<int> a_type = sorted_desc(alpha);
    const std::vector<int> b_type = sorted_desc(beta);
    const auto taus = all_transpositions(d);
    BudgetedSearch budget(500'000'000ULL);

    std::uint64_t count = 0;
    struct Frame {
        Perm p;
        Components c;
        int left;
    };
    for (const Perm& sigma : all_perms(d)) {
        if (cycle_type(sigma, d) != a_type) continue;
        std::vector<Frame> stack{{sigma, initial_components(sigma, d), r}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            budget.tick();
            if (f.left == 0) {
                if (transitive(f.c, d) && cycle_type(f.p, d) == b_type) ++count;
                continue;
            }
            for (Transposition t : taus) stack.push_back({apply_transposition(f.p, t, d), merge(f.c, t, d), f.left - 1});
        }
    }
    return Rational(Integer(count), factorial(static_cast<unsigned>(d)));
}

std::uint64_t orbit_count_units(const std::vector<std::uint64_t>& alpha)
{
    if (alpha.empty()) throw DomainError("orbit_count_units: empty profile");
    std::uint64_t total = 1;
    std::uint64_t d = 1;
    for (std::uint64_t a : alpha) {
        if (a == 0) throw DomainError("orbit_count_units: parts must be positive");
        total *= a;
        if (total > 1'000'000) throw ResourceError("orbit_count_units: product exceeds 10^6");
        d = std::lcm(d, a);
    }
    // A unit u_i with u_i^{alpha_i} = 1 is exp(2 pi i e_i / d) with e_i a multiple of d / alpha_i.
    // The generator of mu_d moves e_i by d / alpha_i.
    const std::size_t k = alpha.size();
    std::set<std::vector<std::uint64_t>> unvisited;
    std::vector<std::uint64_t> j(k, 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<std::uint64_t> e(k);
        for (std::size_t i = 0; i < k; ++i) e[i] = j[i] * (d / alpha[i]);
        unvisited.insert(std::move(e));
        for (std::size_t i = k; i-- > 0;) {
            if (++j[i] < alpha[i]) break;
            j[i] = 0;
        }
    }
    std::uint64_t orbits = 0;
    while (!unvisited.empty()) {
        ++orbits;
        std::deque<std::vector<std::uint64_t>> queue{*unvisited.begin()};
        unvisited.erase(unvisited.begin());
        while (!queue.empty()) {
            auto cur = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < k; ++j) cur[j] = (cur[j] + d / alpha[j]) % d;
            auto it = unvisited.find(cur);
            if (it != unvisited.end()) {
                unvisited.erase(it);
                queue.push_back(std::move(cur));
            }
        }
    }
    return orbits;
}

Rational burnside_count_units(const std::vector<std::uint64_t>& alpha)
{
    if (alpha.empty()) throw DomainError("burnside_count_units: empty profile");
    std::uint64_t d = 1;
    std::uint64_t total = 1;
    for (std::uint64_t a : alpha) {
        if (a == 0) throw DomainError("burnside_count_units: parts must be positive");
        d = std::lcm(d, a);
        total *= a;
        if (total > 1'000'000) throw ResourceError("burnside_count_units: product exceeds 10^6");
    }
    // Fix(s) factorizes over coordinates: e_i + s d/alpha_i = e_i mod d has alpha_i solutions or none.
    Integer fixed_sum = 0;
    for (std::uint64_t s = 0; s < d; ++s) {
        Integer fix = 1;
        for (std::uint64_t a : alpha) {
            std::uint64_t count = 0;
            for (std::uint64_t j = 0; j < a; ++j) {
                std::uint64_t e = j * (d / a);
                if ((e + s * (d / a)) % d == e) ++count;
            }
            fix *= count;
        }
        fixed_sum += fix;
    }
    return Rational(fixed_sum, d);
}

}  // namespace logloc::oracles
