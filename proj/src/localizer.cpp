#include "logloc/localizer.hpp"

#include "logloc/errors.hpp"
#include "logloc/intersection.hpp"
#include "logloc/kledger.hpp"
#include "logloc/parallel.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace logloc::localizer {

using eq::EqScalar;
using eq::KLedger;
using eq::KSummand;
using eq::LocusClass;
using splitloci::DiscreteData;
using splitloci::SplitData;

namespace {

template <class Key, class Value>
class Memo {
public:
    template <class Make>
    Value get(const Key& key, Make&& make)
    {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value v = make();
        std::lock_guard lock(mutex_);
        return table_.emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, Value> table_;
};

Memo<int, EqScalar>& edge_memo()
{
    static Memo<int, EqScalar> memo;
    return memo;
}

Memo<std::tuple<int, int, std::vector<int>>, EqScalar>& star_memo()
{
    static Memo<std::tuple<int, int, std::vector<int>>, EqScalar> memo;
    return memo;
}

Memo<std::pair<std::vector<int>, std::vector<int>>, Rational>& hurwitz_memo()
{
    static Memo<std::pair<std::vector<int>, std::vector<int>>, Rational> memo;
    return memo;
}

Integer product_of(const std::vector<int>& parts)
{
    Integer p = 1;
    for (int x : parts) p *= x;
    return p;
}

/// All exponent vectors of length n with sum total, lexicographic.
template <class Visit>
void for_each_exponent(int n, int total, Visit&& visit)
{
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            a[static_cast<std::size_t>(i)] = left;
            visit(a);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            a[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, left - x);
        }
    };
    if (n == 0) {
        if (total == 0) visit(a);
        return;
    }
    rec(rec, 0, total);
}

void require_partition(const std::vector<int>& parts, const char* who)
{
    if (parts.empty()) throw DomainError(std::string(who) + ": empty partition");
    for (int p : parts)
        if (p <= 0) throw DomainError(std::string(who) + ": parts must be positive");
}

}  // namespace

EqScalar edge_factor(int e)
{
    if (e <= 0) throw DomainError("edge_factor: edge degree must be positive");
    return edge_memo().get(e, [e] {
        // Sections of the pulled-back log tangent bundle along z -> z^e carry weights j t / e, j = 0..e.
        KLedger sections;
        for (int j = 0; j <= e; ++j) sections.add(KSummand{"H0(edge)#" + std::to_string(j), Rational(j, e), 0, "", +1});
        return eq::euler_class(sections, true, 0).coefficient(0).inverse();
    });
}

EqScalar vertex_integral(const StarVertex& v)
{
    if (v.genus != 0) throw UnsupportedError("vertex_integral: only genus-0 vertices are evaluated");
    if (v.edges.empty()) throw StructuralError("vertex_integral: a vertex over 0 needs at least one edge");
    if (v.marks < 0) throw DomainError("vertex_integral: negative number of marks");
    const int s = static_cast<int>(v.edges.size());
    const int n = s + v.marks;
    std::vector<EqScalar> root;  // t / e_i, the node-smoothing weight on each edge
    for (int e : v.edges) {
        if (e <= 0) throw DomainError("vertex_integral: edge degree must be positive");
        root.push_back(EqScalar::monomial(Rational(1, e), 1));
    }
    if (n == 1) return root[0];
    if (n == 2) {
        EqScalar sum;
        for (const auto& r : root) sum += r.inverse();
        EqScalar prod = 1;
        for (const auto& r : root) prod *= r.inverse();
        return prod / sum;
    }
    EqScalar total;
    std::vector<int> exponents(static_cast<std::size_t>(n), 0);
    for_each_exponent(s, n - 3, [&](const std::vector<int>& a) {
        std::copy(a.begin(), a.end(), exponents.begin());
        Rational coeff = eq::psi_integral_genus0(exponents, n);
        if (coeff == 0) return;
        EqScalar term = coeff;
        for (int i = 0; i < s; ++i) {
            EqScalar inv = root[static_cast<std::size_t>(i)].inverse();
            for (int p = 0; p <= a[static_cast<std::size_t>(i)]; ++p) term *= inv;
        }
        total += term;
    });
    return total;
}

EqScalar star_contribution(const StarVertex& v)
{
    std::vector<int> edges = v.edges;
    std::sort(edges.begin(), edges.end());
    return star_memo().get({v.genus, v.marks, edges}, [&] {
        EqScalar out = vertex_integral(v);
        KLedger normal;
        normal.add(KSummand{"T0@vertex", TargetWeights::log_tangent_at_zero, 0, "", +1});
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int e = edges[i];
            out *= edge_factor(e) * EqScalar(Rational(1, e));
            normal.add(KSummand{"T0@node" + std::to_string(i), TargetWeights::log_tangent_at_zero, 0, "", -1});
        }
        return out * eq::euler_class(normal, true, 0).coefficient(0).inverse();
    });
}

LocusClass simple_locus_euler(const FixedGraph& graph, int truncation)
{
    if (graph.vertices.empty()) throw StructuralError("simple_locus_euler: empty graph");
    EqScalar inverse_euler = 1;
    for (const auto& v : graph.vertices) inverse_euler *= star_contribution(v);
    return LocusClass::constant(inverse_euler.inverse(), truncation);
}

EqScalar BranchIntegrand::restrict_to(int branch_points_at_zero) const
{
    EqScalar out = 1;
    for (const auto& l : lambda) out *= EqScalar(eq::Poly(std::vector<Rational>{1, branch_points_at_zero - l}), eq::Poly(Rational(1)));
    return out;
}

Rational labeled_double_hurwitz(const std::vector<int>& alpha, const std::vector<int>& beta)
{
    require_partition(alpha, "labeled_double_hurwitz");
    require_partition(beta, "labeled_double_hurwitz");
    const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (d != std::accumulate(beta.begin(), beta.end(), 0)) throw DomainError("labeled_double_hurwitz: degree mismatch");
    if (d > 7) throw ResourceError("labeled_double_hurwitz: degree exceeds bound 7");
    std::vector<int> a = alpha, b = beta;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return hurwitz_memo().get({a, b}, [&] {
        const int r = static_cast<int>(a.size() + b.size()) - 2;
        // State: one-line permutation (3 bits per point) and the orbit partition as
        // a restricted growth string (3 bits per point).
        auto pack = [d](const std::array<int, 8>& perm, const std::array<int, 8>& block) {
            std::uint64_t code = 0;
            for (int x = 0; x < d; ++x) code |= static_cast<std::uint64_t>(perm[x]) << (3 * x);
            for (int x = 0; x < d; ++x) code |= static_cast<std::uint64_t>(block[x]) << (24 + 3 * x);
            return code;
        };
        auto unpack = [d](std::uint64_t code, std::array<int, 8>& perm, std::array<int, 8>& block) {
            for (int x = 0; x < d; ++x) perm[x] = static_cast<int>((code >> (3 * x)) & 7);
            for (int x = 0; x < d; ++x) block[x] = static_cast<int>((code >> (24 + 3 * x)) & 7);
        };
        auto relabel = [d](std::array<int, 8>& block) {
            std::array<int, 8> map;
            map.fill(-1);
            int next = 0;
            for (int x = 0; x < d; ++x) {
                int& m = map[block[x]];
                if (m < 0) m = next++;
                block[x] = m;
            }
        };

        std::array<int, 8> perm{}, block{};
        int start = 0;
        for (int len : a) {
            for (int i = 0; i < len; ++i) {
                perm[start + i] = start + (i + 1) % len;
                block[start + i] = start;
            }
            start += len;
        }
        relabel(block);
        std::unordered_map<std::uint64_t, std::uint64_t> states{{pack(perm, block), 1}};
        for (int step = 0; step < r; ++step) {
            std::unordered_map<std::uint64_t, std::uint64_t> next;
            for (const auto& [code, count] : states) {
                unpack(code, perm, block);
                for (int x = 0; x < d; ++x)
                    for (int y = x + 1; y < d; ++y) {
                        std::array<int, 8> p2 = perm, b2 = block;
                        std::swap(p2[x], p2[y]);
                        if (b2[x] != b2[y]) {
                            int from = b2[y], to = b2[x];
                            for (int z = 0; z < d; ++z)
                                if (b2[z] == from) b2[z] = to;
                            relabel(b2);
                        }
                        std::uint64_t& slot = next[pack(p2, b2)];
                        if (__builtin_add_overflow(slot, count, &slot))
                            throw ResourceError("labeled_double_hurwitz: count overflow");
                    }
            }
            states = std::move(next);
        }
        Integer hits = 0;
        for (const auto& [code, count] : states) {
            unpack(code, perm, block);
            if (std::any_of(block.begin(), block.begin() + d, [](int x) { return x != 0; })) continue;
            std::vector<int> type;
            std::array<bool, 8> seen{};
            for (int x = 0; x < d; ++x) {
                if (seen[x]) continue;
                int len = 0;
                for (int y = x; !seen[y]; y = perm[y]) {
                    seen[y] = true;
                    ++len;
                }
                type.push_back(len);
            }
            std::sort(type.begin(), type.end());
            if (type == b) hits += count;
        }
        // The count is for one sigma; the class has d!/z_alpha members, and z_alpha = prod i^{m_i} m_i!.
        Integer z = 1;
        std::map<int, int> mult;
        for (int x : a) ++mult[x];
        for (const auto& [part, m] : mult) {
            for (int i = 0; i < m; ++i) z *= part;
            z *= factorial(static_cast<unsigned>(m));
        }
        Rational h(hits, z);
        return h * splitloci::multiset_aut_order(a) * splitloci::multiset_aut_order(b);
    });
}

namespace {

int star_branch_points(const StarVertex& v)
{
    const int dv = std::accumulate(v.edges.begin(), v.edges.end(), 0);
    return 2 * v.genus - 2 + dv + static_cast<int>(v.edges.size());
}

BranchIntegrand integrand_for(const DiscreteData& gamma, const std::vector<Rational>& lambda)
{
    const int r = gamma.branch_points();
    if (lambda.empty()) return BranchIntegrand::uniform(r);
    if (static_cast<int>(lambda.size()) != r)
        throw DomainError("integrand: expected " + std::to_string(r) + " insertion weights, got " + std::to_string(lambda.size()));
    return BranchIntegrand{lambda};
}

void require_evaluable(const DiscreteData& gamma)
{
    gamma.validate();
    if (gamma.genus != 0) throw UnsupportedError("localization is evaluated in genus 0 only");
    if (!gamma.marks.empty()) throw UnsupportedError("localization is evaluated without interior marks");
    if (gamma.degree == 0) throw DomainError("localization needs positive degree");
}

LocusContribution simple_contribution(const DiscreteData& gamma, const BranchIntegrand& integrand)
{
    LocusContribution c;
    StarVertex star{gamma.genus, static_cast<int>(gamma.marks.size()), gamma.contact};
    c.numerator_weight = 1;
    c.node_factor = LocusClass::constant(1, 0);
    c.normal_factor = simple_locus_euler(FixedGraph{{star}}, 0);
    c.denominator = c.node_factor * c.normal_factor;
    c.branch_points_at_zero = star_branch_points(star);
    c.payload = LocusClass::constant(integrand.restrict_to(c.branch_points_at_zero), 0);
    return c;
}

LocusContribution composite_contribution(std::shared_ptr<const SplitData> sd, std::size_t index, const BranchIntegrand& integrand,
                                         const DiscreteData& gamma)
{
    LocusContribution c;
    c.label = splitloci::LocusLabel{splitloci::LocusLabel::Kind::composite, sd, index, 0};

    int rubber_points = 0;
    Rational rubber = 1;
    for (const auto& piece : sd->rubber) {
        if (piece.genus != 0 || !piece.marks.empty()) throw UnsupportedError("rubber pieces must be unmarked and of genus 0");
        std::vector<int> ends, contacts;
        for (int n : piece.nodes) ends.push_back(sd->alpha[static_cast<std::size_t>(n)]);
        for (int i : piece.contacts) contacts.push_back(gamma.contact[static_cast<std::size_t>(i)]);
        const int r = static_cast<int>(ends.size() + contacts.size()) - 2;
        rubber_points += r;
        rubber *= labeled_double_hurwitz(ends, contacts) / Rational(factorial(static_cast<unsigned>(r)));
    }
    if (rubber_points < 1) throw std::logic_error("composite locus with unstable rubber");
    const int dim = rubber_points - 1;

    EqScalar base = 1;
    int at_zero = 0;
    for (const auto& piece : sd->base) {
        StarVertex star{piece.genus, static_cast<int>(piece.marks.size()), {}};
        for (int n : piece.nodes) star.edges.push_back(sd->alpha[static_cast<std::size_t>(n)]);
        base *= star_contribution(star);
        at_zero += star_branch_points(star);
    }

    const auto d = static_cast<std::int64_t>(sd->d);
    KLedger node_line;
    node_line.add(KSummand{"L", Rational(TargetWeights::divisor_normal, d), Rational(-1, d), "D", +1});
    c.node_factor = eq::euler_class(node_line, false, dim);
    c.normal_factor = LocusClass::constant(base.inverse(), dim);
    c.denominator = c.node_factor * c.normal_factor;
    c.numerator_weight = Rational(product_of(sd->alpha), d) * Rational(sd->multiplicity) / Rational(splitloci::aut_order(*sd));
    c.payload = LocusClass::constant(integrand.restrict_to(at_zero), dim);
    c.rubber_dim = dim;
    c.rubber_integral = rubber;
    c.branch_points_at_zero = at_zero;
    std::vector<std::uint64_t> a64(sd->alpha.begin(), sd->alpha.end());
    c.enhancements = logmonoid::enumerate_enhancements(a64);
    return c;
}

}  // namespace

void for_each_composite(const DiscreteData& gamma, const AssembleOptions& opts, const std::function<void(const LocusContribution&)>& visit)
{
    require_evaluable(gamma);
    const BranchIntegrand integrand = integrand_for(gamma, opts.lambda);
    std::size_t index = 0;
    splitloci::for_each_splitting(gamma, opts.split, [&](const SplitData& sd) {
        visit(composite_contribution(std::make_shared<const SplitData>(sd), index++, integrand, gamma));
    });
}

std::vector<LocusContribution> assemble_contributions(const DiscreteData& gamma, const AssembleOptions& opts)
{
    require_evaluable(gamma);
    const BranchIntegrand integrand = integrand_for(gamma, opts.lambda);
    std::vector<LocusContribution> out{simple_contribution(gamma, integrand)};
    for_each_composite(gamma, opts, [&](const LocusContribution& c) { out.push_back(c); });
    return out;
}

std::vector<LocusContribution> expand_enhancements(const LocusContribution& grouped)
{
    if (!grouped.is_composite()) return {grouped};
    std::vector<LocusContribution> out;
    const auto& sd = *grouped.label.split;
    for (std::size_t e = 0; e < grouped.enhancements.size(); ++e) {
        LocusContribution c = grouped;
        c.label.enhancement = e;
        c.enhancements = {grouped.enhancements[e]};
        c.numerator_weight = Rational(sd.multiplicity) / Rational(splitloci::aut_order(sd));
        out.push_back(std::move(c));
    }
    return out;
}

bool pushforward_check(const LocusContribution& contrib)
{
    if (!contrib.is_composite()) throw DomainError("pushforward_check: contribution is not composite");
    const SplitData& sd = *contrib.label.split;
    const int dim = contrib.node_factor.truncation();
    KLedger pulled_back;
    pulled_back.add(KSummand{"pi*L", TargetWeights::divisor_normal, -1, "D", +1});
    const LocusClass gv = eq::euler_class(pulled_back, false, dim);
    const EqScalar d = Rational(static_cast<std::int64_t>(sd.d));
    if (d * contrib.node_factor != gv) return false;
    const LocusClass lhs = EqScalar(contrib.numerator_weight) * contrib.node_factor.inverse();
    const Rational weight = Rational(product_of(sd.alpha)) * Rational(sd.multiplicity) / Rational(splitloci::aut_order(sd));
    const LocusClass rhs = EqScalar(weight) * gv.inverse();
    return lhs == rhs;
}

EqScalar evaluate_contribution(const LocusContribution& contrib)
{
    const LocusClass integrand = EqScalar(contrib.numerator_weight) * (contrib.payload * contrib.denominator.inverse());
    return integrand.coefficient(contrib.rubber_dim) * EqScalar(contrib.rubber_integral);
}

TotalCheck localization_total(const std::vector<LocusContribution>& contribs, const Evaluator& evaluator)
{
    const auto values = parallel_map<EqScalar>(contribs.size(), [&](std::size_t i) { return evaluator(contribs[i]); });
    TotalCheck out;
    for (const auto& v : values) out.total += v;
    out.constant = out.total.is_constant();
    return out;
}

bool t_independence_check(const std::vector<LocusContribution>& contribs, const Evaluator& evaluator)
{
    return localization_total(contribs, evaluator).constant;
}

Rational hurwitz_genus0(const std::vector<int>& alpha, int max_degree)
{
    require_partition(alpha, "hurwitz_genus0");
    const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (d > max_degree)
        throw ResourceError("hurwitz_genus0: degree " + std::to_string(d) + " exceeds bound " + std::to_string(max_degree));
    const int n = static_cast<int>(alpha.size());
    const int r = d + n - 2;

    // Sum over psi monomials of prod 1/(1 - alpha_i psi_i), with the unstable conventions for n < 3.
    Rational series = 0;
    if (n == 1) {
        series = Rational(1, alpha[0] * alpha[0]);
    } else if (n == 2) {
        series = Rational(1, alpha[0] + alpha[1]);
    } else {
        for_each_exponent(n, n - 3, [&](const std::vector<int>& a) {
            Rational term = eq::psi_integral_genus0(a, n);
            for (int i = 0; i < n; ++i)
                for (int p = 0; p < a[static_cast<std::size_t>(i)]; ++p) term *= alpha[static_cast<std::size_t>(i)];
            series += term;
        });
    }
    Rational prefactor = Rational(factorial(static_cast<unsigned>(r)));
    for (int x : alpha) {
        Integer power = 1;
        for (int i = 0; i < x; ++i) power *= x;
        prefactor *= Rational(power, factorial(static_cast<unsigned>(x)));
    }
    prefactor /= Rational(splitloci::multiset_aut_order(alpha));
    return prefactor * series;
}

HurwitzResult compute_invariant(const InvariantRequest& request)
{
    require_evaluable(request.gamma);
    HurwitzResult out;
    out.value = hurwitz_genus0(request.gamma.contact, request.split.max_degree);
    AssembleOptions opts{request.split, request.lambda};
    out.contributions = assemble_contributions(request.gamma, opts);
    out.evaluated = parallel_map<EqScalar>(out.contributions.size(),
                                           [&](std::size_t i) { return evaluate_contribution(out.contributions[i]); });
    for (const auto& v : out.evaluated) out.localization_total += v;
    out.t_independent = out.localization_total.is_constant();
    if (out.t_independent)
        out.localization_value = out.localization_total.constant_value() / Rational(splitloci::multiset_aut_order(request.gamma.contact));
    return out;
}

}  // namespace logloc::localizer
