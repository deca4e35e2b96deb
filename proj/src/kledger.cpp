#include "logloc/kledger.hpp"

#include "logloc/errors.hpp"

#include <algorithm>
#include <set>

namespace logloc::eq {

KSummand KSummand::negated() const
{
    KSummand s = *this;
    s.sign = -sign;
    return s;
}

KLedger::KLedger(std::initializer_list<KSummand> summands)
{
    for (const auto& s : summands) add(s);
}

void KLedger::add(KSummand s)
{
    if (s.label.empty()) throw StructuralError("KSummand: empty label");
    if (s.sign != 1 && s.sign != -1) throw StructuralError("KSummand: sign must be +1 or -1");
    items_.push_back(std::move(s));
}

void KLedger::add(const KLedger& other)
{
    for (const auto& s : other.items_) add(s);
}

void KLedger::subtract(const KLedger& other)
{
    for (const auto& s : other.items_) add(s.negated());
}

KLedger KLedger::negated() const
{
    KLedger out;
    out.subtract(*this);
    return out;
}

std::map<std::tuple<std::string, Rational, Rational, std::string>, int> KLedger::canonical() const
{
    std::map<std::tuple<std::string, Rational, Rational, std::string>, int> net;
    for (const auto& s : items_) net[{s.label, s.weight, s.psi_coefficient, s.psi_marker}] += s.sign;
    std::erase_if(net, [](const auto& kv) { return kv.second == 0; });
    return net;
}

LocusClass euler_class(const KLedger& ledger, bool moving_only, int truncation)
{
    LocusClass num = LocusClass::constant(EqScalar(1), truncation);
    LocusClass den = LocusClass::constant(EqScalar(1), truncation);
    std::set<std::string> markers;
    for (const auto& [key, mult] : ledger.canonical()) {
        const auto& [label, weight, psi, marker] = key;
        if (moving_only && weight == 0) continue;
        if (psi != 0) markers.insert(marker);
        if (weight == 0 && psi == 0 && mult < 0)
            throw SingularEulerClass("euler_class: summand '" + label + "' has zero weight and no psi part");
        LocusClass factor = LocusClass::linear(EqScalar::monomial(weight, 1), EqScalar(psi), truncation);
        LocusClass& target = mult > 0 ? num : den;
        for (int i = 0; i < std::abs(mult); ++i) target = target * factor;
    }
    if (markers.size() > 1) throw StructuralError("euler_class: more than one psi marker in a single-psi class");
    return num * den.inverse();
}

KSummand divisor_tangent(const Rational& weight) { return KSummand{"T_D", weight, 0, "", +1}; }

bool ledger_glue_check(const KLedger& t1, const KLedger& t2, int k, const KLedger& node_terms, const KLedger& glued,
                       const KSummand& td)
{
    KLedger expected = t1 + t2;
    for (int i = 0; i < k; ++i) expected.add(td.negated());
    expected.add(node_terms);
    return expected == glued;
}

namespace {

KSummand random_summand(std::mt19937_64& rng, const std::string& label)
{
    std::uniform_int_distribution<int> w(-4, 4);
    return KSummand{label, w(rng), 0, "", +1};
}

std::vector<KSummand> random_block(std::mt19937_64& rng, const std::string& prefix, int max_count)
{
    std::uniform_int_distribution<int> n(0, max_count);
    std::vector<KSummand> out;
    int count = n(rng);
    for (int i = 0; i < count; ++i) out.push_back(random_summand(rng, prefix + "#" + std::to_string(i)));
    return out;
}

KLedger signed_ledger(const std::vector<KSummand>& plus, const std::vector<KSummand>& minus)
{
    KLedger out;
    for (const auto& s : plus) out.add(s);
    for (const auto& s : minus) out.add(s.negated());
    return out;
}

struct Side {
    std::vector<KSummand> aut, def, h0, h1;
    KLedger tangent_obstruction() const
    {
        std::vector<KSummand> plus = def;
        plus.insert(plus.end(), h0.begin(), h0.end());
        std::vector<KSummand> minus = aut;
        minus.insert(minus.end(), h1.begin(), h1.end());
        return signed_ledger(plus, minus);
    }
};

Side random_side(std::mt19937_64& rng, const std::string& name, const KSummand& td, int td_sections)
{
    Side s;
    s.aut = random_block(rng, "aut(" + name + ")", 3);
    s.def = random_block(rng, "def(" + name + ")", 4);
    s.h0 = random_block(rng, "H0(" + name + ")", 4);
    s.h1 = random_block(rng, "H1(" + name + ")", 3);
    // Sections that do not vanish at the nodes restrict to T_D there.
    for (int i = 0; i < td_sections; ++i) s.h0.push_back(td);
    std::shuffle(s.h0.begin(), s.h0.end(), rng);
    return s;
}

}  // namespace

GlueInstance random_glue_instance(std::mt19937_64& rng, int k)
{
    if (k < 0) throw DomainError("random_glue_instance: negative node count");
    std::uniform_int_distribution<int> wd(-3, 3);
    const KSummand td = divisor_tangent(wd(rng));
    std::uniform_int_distribution<int> sections(0, k);
    Side c1 = random_side(rng, "C1", td, sections(rng));
    Side c2 = random_side(rng, "C2", td, sections(rng));

    // Normalization sequence: 0 -> H0(C) -> H0(C1)+H0(C2) -> sum_i T_D(y_i) -> H1(C) -> H1(C1)+H1(C2) -> 0.
    std::vector<KSummand> source = c1.h0;
    source.insert(source.end(), c2.h0.begin(), c2.h0.end());
    const int available = static_cast<int>(std::count_if(source.begin(), source.end(),
                                                         [&](const KSummand& s) { return s.key() == td.key(); }));
    std::uniform_int_distribution<int> rank(0, std::min(k, available));
    const int image_rank = rank(rng);
    std::vector<KSummand> kernel = source;
    for (int i = 0; i < image_rank; ++i) {
        auto it = std::find_if(kernel.begin(), kernel.end(), [&](const KSummand& s) { return s.key() == td.key(); });
        kernel.erase(it);
    }
    std::vector<KSummand> h1 = c1.h1;
    h1.insert(h1.end(), c2.h1.begin(), c2.h1.end());
    for (int i = image_rank; i < k; ++i) h1.push_back(td);

    // Each node over the divisor is smoothed in the direction N_{D/X} (x) N_{D/Y}.
    GlueInstance inst;
    std::uniform_int_distribution<int> wn(-4, 4);
    for (int i = 0; i < k; ++i) {
        std::string node = "y" + std::to_string(i + 1);
        inst.node_terms.add(KSummand{"H0(N(x)N)@" + node, wn(rng), -1, node, +1});
    }
    std::vector<KSummand> def = c1.def;
    def.insert(def.end(), c2.def.begin(), c2.def.end());
    for (const auto& s : inst.node_terms.summands()) def.push_back(s);
    std::vector<KSummand> aut = c1.aut;
    aut.insert(aut.end(), c2.aut.begin(), c2.aut.end());

    std::vector<KSummand> plus = def;
    plus.insert(plus.end(), kernel.begin(), kernel.end());
    std::vector<KSummand> minus = aut;
    minus.insert(minus.end(), h1.begin(), h1.end());

    inst.t1 = c1.tangent_obstruction();
    inst.t2 = c2.tangent_obstruction();
    inst.k = k;
    inst.glued = signed_ledger(plus, minus);
    inst.td = td;
    return inst;
}

GlueInstance perturb_glue_instance(const GlueInstance& inst, std::mt19937_64& rng)
{
    GlueInstance out = inst;
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
    case 0:
        out.k = inst.k > 0 ? inst.k - 1 : inst.k + 1;
        break;
    case 1:
        if (inst.k > 0) {
            KLedger fewer;
            const auto& items = inst.node_terms.summands();
            for (std::size_t i = 1; i < items.size(); ++i) fewer.add(items[i]);
            out.node_terms = fewer;
            break;
        }
        [[fallthrough]];
    default: {
        KLedger shifted;
        const auto& items = inst.glued.summands();
        std::uniform_int_distribution<std::size_t> pick(0, items.empty() ? 0 : items.size() - 1);
        std::size_t victim = items.empty() ? 0 : pick(rng);
        for (std::size_t i = 0; i < items.size(); ++i) {
            KSummand s = items[i];
            if (i == victim) s.weight += 1;
            shifted.add(s);
        }
        if (items.empty()) shifted.add(KSummand{"spurious", 1, 0, "", +1});
        out.glued = shifted;
        break;
    }
    }
    return out;
}

}  // namespace logloc::eq
