#include "logloc/splitloci.hpp"

#include "logloc/errors.hpp"
#include "logloc/logmonoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace logloc::splitloci {

void DiscreteData::validate() const
{
    if (genus < 0) throw DomainError("discrete data: negative genus");
    if (degree < 0) throw DomainError("discrete data: negative degree");
    int sum = 0;
    for (int c : contact) {
        if (c <= 0) throw DomainError("discrete data: contact orders must be positive");
        sum += c;
    }
    if (sum != degree)
        throw DomainError("discrete data: contact orders sum to " + std::to_string(sum) + " but degree is " +
                          std::to_string(degree));
    std::set<std::string> seen;
    for (const auto& label : relative_labels()) seen.insert(label);
    for (const auto& m : marks) {
        if (m.empty()) throw DomainError("discrete data: empty mark label");
        if (!seen.insert(m).second) throw DomainError("discrete data: duplicate mark label '" + m + "'");
    }
}

std::vector<std::string> DiscreteData::relative_labels() const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < contact.size(); ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

int DiscreteData::branch_points() const { return 2 * genus - 2 + degree + static_cast<int>(contact.size()); }

std::vector<std::string> default_marks(int m)
{
    if (m < 0) throw DomainError("negative number of marks");
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i) out.push_back("p" + std::to_string(i + 1));
    return out;
}

std::uint64_t multiset_aut_order(const std::vector<int>& parts)
{
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    std::uint64_t order = 1;
    for (const auto& [value, count] : mult)
        for (int i = 2; i <= count; ++i) order *= static_cast<std::uint64_t>(i);
    return order;
}

std::uint64_t aut_order(const SplitData& sd) { return multiset_aut_order(sd.alpha); }

bool is_trivial_cylinder(const RubberPiece& piece)
{
    return piece.genus == 0 && piece.marks.empty() && piece.nodes.size() == 1 && piece.contacts.size() == 1;
}

bool is_stable_rubber(const SplitData& sd)
{
    return !std::all_of(sd.rubber.begin(), sd.rubber.end(), is_trivial_cylinder);
}

namespace {

/// Non-decreasing k-part partitions of n, lexicographically increasing.
void partitions_into(int n, int k, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (k == 0) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (int p = min_part; p * k <= n; ++p) {
        cur.push_back(p);
        partitions_into(n - p, k - 1, p, cur, out);
        cur.pop_back();
    }
}

/// Set partitions of {0..n-1} as restricted growth strings, in increasing order.
template <class Visit>
void for_each_set_partition(int n, Visit&& visit)
{
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == n) {
            visit(rgs, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) {
        visit(rgs, 0);
        return;
    }
    rec(rec, 0, 0);
}

/// Weak compositions of total into parts slots, lexicographically increasing.
template <class Visit>
void for_each_composition(int total, int parts, Visit&& visit)
{
    std::vector<int> v(static_cast<std::size_t>(parts), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == parts - 1) {
            v[static_cast<std::size_t>(i)] = left;
            visit(v);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            v[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, left - x);
        }
    };
    if (parts == 0) {
        if (total == 0) visit(v);
        return;
    }
    rec(rec, 0, total);
}

struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 7);
        return h;
    }
};

bool bipartite_connected(const std::vector<int>& base_of, const std::vector<int>& rubber_of, int p, int q)
{
    std::vector<int> parent(static_cast<std::size_t>(p + q));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
        return x;
    };
    int components = p + q;
    for (std::size_t i = 0; i < base_of.size(); ++i) {
        int a = find(base_of[i]);
        int b = find(p + rubber_of[i]);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

struct Candidate {
    SplitData data;
    std::vector<int> s1_index;
    std::vector<int> key;
};

class AlphaBatch {
public:
    AlphaBatch(const DiscreteData& gamma, const std::vector<int>& alpha, const SplitOptions& opts)
        : gamma_(gamma), alpha_(alpha), opts_(opts), k_(static_cast<int>(alpha.size())), h_(static_cast<int>(gamma.contact.size())),
          m_(static_cast<int>(gamma.marks.size()))
    {
    }

    std::vector<Candidate> run()
    {
        if (opts_.disconnected_pieces) {
            for_each_set_partition(h_, [&](const std::vector<int>& contact_of, int q) { with_contacts(contact_of, q); });
        } else {
            with_contacts(std::vector<int>(static_cast<std::size_t>(h_), 0), 1);
        }
        std::sort(found_.begin(), found_.end(), [](const Candidate& a, const Candidate& b) {
            return std::tie(a.data.g1, a.s1_index, a.key) < std::tie(b.data.g1, b.s1_index, b.key);
        });
        return std::move(found_);
    }

private:
    void with_contacts(const std::vector<int>& contact_of, int q)
    {
        contact_of_ = contact_of;
        q_ = q;
        std::vector<int> capacity(static_cast<std::size_t>(q), 0);
        for (int i = 0; i < h_; ++i) capacity[static_cast<std::size_t>(contact_of[static_cast<std::size_t>(i)])] += gamma_.contact[static_cast<std::size_t>(i)];
        rubber_of_.assign(static_cast<std::size_t>(k_), 0);
        assign_nodes(0, capacity);
    }

    void assign_nodes(int node, std::vector<int>& capacity)
    {
        if (node == k_) {
            for (int c : capacity)
                if (c != 0) return;
            choose_base();
            return;
        }
        for (int j = 0; j < q_; ++j) {
            int& cap = capacity[static_cast<std::size_t>(j)];
            if (cap < alpha_[static_cast<std::size_t>(node)]) continue;
            cap -= alpha_[static_cast<std::size_t>(node)];
            rubber_of_[static_cast<std::size_t>(node)] = j;
            assign_nodes(node + 1, capacity);
            cap += alpha_[static_cast<std::size_t>(node)];
        }
    }

    void choose_base()
    {
        auto with_base = [&](const std::vector<int>& base_of, int p) {
            const int loops = k_ - p - q_ + 1;
            if (loops < 0 || loops > gamma_.genus) return;
            if (!bipartite_connected(base_of, rubber_of_, p, q_)) return;
            base_of_ = base_of;
            p_ = p;
            for_each_composition(gamma_.genus - loops, p + q_, [&](const std::vector<int>& genera) {
                genera_ = genera;
                distribute_marks();
            });
        };
        if (opts_.disconnected_pieces)
            for_each_set_partition(k_, with_base);
        else
            with_base(std::vector<int>(static_cast<std::size_t>(k_), 0), 1);
    }

    void distribute_marks()
    {
        mark_of_.assign(static_cast<std::size_t>(m_), 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == m_) {
                record();
                return;
            }
            for (int piece = 0; piece < p_ + q_; ++piece) {
                mark_of_[static_cast<std::size_t>(i)] = piece;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }

    void record()
    {
        // Stability of the rubber side.
        bool all_trivial = true;
        for (int j = 0; j < q_ && all_trivial; ++j) {
            int nodes = 0, contacts = 0, marks = 0;
            for (int i = 0; i < k_; ++i) nodes += rubber_of_[static_cast<std::size_t>(i)] == j;
            for (int i = 0; i < h_; ++i) contacts += contact_of_[static_cast<std::size_t>(i)] == j;
            for (int i = 0; i < m_; ++i) marks += mark_of_[static_cast<std::size_t>(i)] == p_ + j;
            all_trivial = genera_[static_cast<std::size_t>(p_ + j)] == 0 && marks == 0 && nodes == 1 && contacts == 1;
        }
        if (all_trivial) return;

        if (++labeled_ > 50'000'000ULL) throw ResourceError("enumerate_splittings: too many node arrangements");

        std::vector<int> key(contact_of_);
        for (int j = 0; j < q_; ++j) {
            key.push_back(genera_[static_cast<std::size_t>(p_ + j)]);
            for (int i = 0; i < m_; ++i)
                if (mark_of_[static_cast<std::size_t>(i)] == p_ + j) key.push_back(i);
            key.push_back(-1);
        }
        std::vector<std::vector<int>> descriptors(static_cast<std::size_t>(p_));
        for (int b = 0; b < p_; ++b) {
            auto& desc = descriptors[static_cast<std::size_t>(b)];
            desc.push_back(genera_[static_cast<std::size_t>(b)]);
            for (int i = 0; i < m_; ++i)
                if (mark_of_[static_cast<std::size_t>(i)] == b) desc.push_back(i);
            desc.push_back(-1);
            std::vector<std::pair<int, int>> ends;
            for (int i = 0; i < k_; ++i)
                if (base_of_[static_cast<std::size_t>(i)] == b)
                    ends.emplace_back(alpha_[static_cast<std::size_t>(i)], rubber_of_[static_cast<std::size_t>(i)]);
            std::sort(ends.begin(), ends.end());
            for (auto [a, r] : ends) {
                desc.push_back(a);
                desc.push_back(r);
            }
        }
        std::sort(descriptors.begin(), descriptors.end());
        for (const auto& desc : descriptors) {
            key.push_back(static_cast<int>(desc.size()));
            key.insert(key.end(), desc.begin(), desc.end());
        }

        auto [it, inserted] = index_.try_emplace(std::move(key), found_.size());
        if (!inserted) {
            ++found_[it->second].data.multiplicity;
            return;
        }
        if (found_.size() >= opts_.max_splittings) throw ResourceError("enumerate_splittings: splitting bound exceeded");
        found_.push_back(build(it->first));
    }

    Candidate build(const std::vector<int>& key) const
    {
        Candidate c;
        SplitData& sd = c.data;
        sd.alpha = alpha_;
        sd.deg1 = std::accumulate(alpha_.begin(), alpha_.end(), 0);
        std::vector<std::uint64_t> a64(alpha_.begin(), alpha_.end());
        sd.d = logmonoid::lcm_of(a64);
        sd.base.resize(static_cast<std::size_t>(p_));
        sd.rubber.resize(static_cast<std::size_t>(q_));
        for (int b = 0; b < p_; ++b) sd.base[static_cast<std::size_t>(b)].genus = genera_[static_cast<std::size_t>(b)];
        for (int j = 0; j < q_; ++j) sd.rubber[static_cast<std::size_t>(j)].genus = genera_[static_cast<std::size_t>(p_ + j)];
        for (int i = 0; i < k_; ++i) {
            sd.base[static_cast<std::size_t>(base_of_[static_cast<std::size_t>(i)])].nodes.push_back(i);
            sd.rubber[static_cast<std::size_t>(rubber_of_[static_cast<std::size_t>(i)])].nodes.push_back(i);
        }
        for (int i = 0; i < h_; ++i) sd.rubber[static_cast<std::size_t>(contact_of_[static_cast<std::size_t>(i)])].contacts.push_back(i);
        for (int i = 0; i < m_; ++i) {
            int piece = mark_of_[static_cast<std::size_t>(i)];
            const std::string& label = gamma_.marks[static_cast<std::size_t>(i)];
            if (piece < p_) {
                sd.base[static_cast<std::size_t>(piece)].marks.push_back(label);
                sd.s1.push_back(label);
                c.s1_index.push_back(i);
            } else {
                sd.rubber[static_cast<std::size_t>(piece - p_)].marks.push_back(label);
                sd.s2.push_back(label);
            }
        }
        int g1 = 1 - p_, g2 = 1 - q_;
        for (int b = 0; b < p_; ++b) g1 += genera_[static_cast<std::size_t>(b)];
        for (int j = 0; j < q_; ++j) g2 += genera_[static_cast<std::size_t>(p_ + j)];
        sd.g1 = g1;
        sd.g2 = g2;
        sd.multiplicity = 1;
        c.key = key;
        return c;
    }

    const DiscreteData& gamma_;
    const std::vector<int>& alpha_;
    const SplitOptions& opts_;
    int k_, h_, m_;
    int p_ = 0, q_ = 0;
    std::vector<int> contact_of_, rubber_of_, base_of_, genera_, mark_of_;
    std::unordered_map<std::vector<int>, std::size_t, KeyHash> index_;
    std::vector<Candidate> found_;
    std::uint64_t labeled_ = 0;
};

}  // namespace

void for_each_splitting(const DiscreteData& gamma, const SplitOptions& opts, const std::function<void(const SplitData&)>& visit)
{
    gamma.validate();
    if (gamma.degree == 0) return;
    if (gamma.degree > opts.max_degree)
        throw ResourceError("enumerate_splittings: degree " + std::to_string(gamma.degree) + " exceeds bound " +
                            std::to_string(opts.max_degree));
    for (int k = 1; k <= gamma.degree; ++k) {
        std::vector<std::vector<int>> alphas;
        std::vector<int> cur;
        partitions_into(gamma.degree, k, 1, cur, alphas);
        for (const auto& alpha : alphas) {
            AlphaBatch batch(gamma, alpha, opts);
            for (const auto& c : batch.run()) visit(c.data);
        }
    }
}

std::vector<SplitData> enumerate_splittings(const DiscreteData& gamma, const SplitOptions& opts)
{
    std::vector<SplitData> out;
    for_each_splitting(gamma, opts, [&](const SplitData& sd) {
        if (out.size() >= opts.max_splittings) throw ResourceError("enumerate_splittings: splitting bound exceeded");
        out.push_back(sd);
    });
    return out;
}

std::vector<LocusLabel> locus_labels(const DiscreteData& gamma, const SplitOptions& opts)
{
    std::vector<LocusLabel> out;
    out.push_back(LocusLabel{});
    std::size_t index = 0;
    for_each_splitting(gamma, opts, [&](const SplitData& sd) {
        auto shared = std::make_shared<const SplitData>(sd);
        std::vector<std::uint64_t> a64(sd.alpha.begin(), sd.alpha.end());
        const Integer count = logmonoid::count_enhancements(a64);
        for (Integer e = 0; e < count; ++e)
            out.push_back(LocusLabel{LocusLabel::Kind::composite, shared, index, static_cast<std::size_t>(e)});
        ++index;
    });
    return out;
}

}  // namespace logloc::splitloci
