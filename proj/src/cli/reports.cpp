#include "reports.hpp"

#include "logloc/deformation.hpp"
#include "logloc/errors.hpp"
#include "logloc/kledger.hpp"
#include "logloc/localizer.hpp"
#include "logloc/logmonoid.hpp"
#include "logloc/oracles.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace logloc::cli {

namespace {

using io::Json;
using io::to_json;

splitloci::DiscreteData gamma_from(const RunConfig& config)
{
    if (config.profile.empty()) throw UsageError("--profile is required for " + config.command);
    for (int c : config.profile)
        if (c <= 0) throw UsageError("--profile entries must be positive integers");
    const int sum = std::accumulate(config.profile.begin(), config.profile.end(), 0);
    if (config.degree && *config.degree != sum)
        throw UsageError("--degree " + std::to_string(*config.degree) + " does not match the profile sum " + std::to_string(sum));
    if (config.genus < 0) throw UsageError("--genus must be non-negative");
    if (config.marks < 0) throw UsageError("--marks must be non-negative");
    splitloci::DiscreteData gamma;
    gamma.genus = config.genus;
    gamma.degree = sum;
    gamma.contact = config.profile;
    gamma.marks = splitloci::default_marks(config.marks);
    return gamma;
}

splitloci::SplitOptions split_options(const RunConfig& config)
{
    splitloci::SplitOptions opts;
    opts.disconnected_pieces = !config.connected_only;
    if (config.max_degree) opts.max_degree = *config.max_degree;
    return opts;
}

std::string join(const std::vector<int>& v, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

Json header(const std::string& command)
{
    return Json{{"schema", io::kSchema}, {"command", command}};
}

/// Partitions of n in decreasing-part order, lexicographically decreasing.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_up_to(int max_degree)
{
    std::vector<std::vector<int>> out;
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<int> cur;
        partitions(d, d, cur, out);
    }
    return out;
}

int require_max_degree(const RunConfig& config, int fallback, int bound, const char* what)
{
    const int m = config.max_degree.value_or(fallback);
    if (m < 1) throw UsageError("--max-degree must be positive");
    if (m > bound) throw ResourceError(std::string(what) + ": --max-degree " + std::to_string(m) + " exceeds bound " + std::to_string(bound));
    return m;
}

}  // namespace

Report enumerate_report(const RunConfig& config)
{
    const auto gamma = gamma_from(config);
    const auto opts = split_options(config);
    const auto splittings = splitloci::enumerate_splittings(gamma, opts);

    Report r;
    r.json = header("enumerate");
    r.json["gamma"] = to_json(gamma);
    r.json["options"] = Json{{"disconnected_pieces", opts.disconnected_pieces}};
    Json splits = Json::array();
    Json loci = Json::array();
    loci.push_back(Json{{"label", Json{{"kind", "simple"}}}, {"weight", "1"}});
    std::ostringstream table;
    table << "discrete data: genus " << gamma.genus << ", degree " << gamma.degree << ", profile (" << join(gamma.contact)
          << "), marks " << gamma.marks.size() << "\n";
    table << "simple locus                                weight 1\n";
    std::size_t label_count = 1;
    for (std::size_t i = 0; i < splittings.size(); ++i) {
        const auto& sd = splittings[i];
        splits.push_back(to_json(sd));
        std::vector<std::uint64_t> a64(sd.alpha.begin(), sd.alpha.end());
        const auto units = logmonoid::enumerate_enhancements(a64);
        const Rational weight = Rational(sd.multiplicity) / Rational(splitloci::aut_order(sd));
        for (std::size_t e = 0; e < units.size(); ++e) {
            Json u = Json::array();
            for (const auto& x : units[e]) u.push_back(to_json(x));
            loci.push_back(Json{{"label", Json{{"kind", "composite"}, {"split", i}, {"enhancement", e}}},
                                {"alpha", sd.alpha},
                                {"units", u},
                                {"weight", to_json(weight)}});
            ++label_count;
        }
        table << "split " << i << ": alpha (" << join(sd.alpha) << "), g1 " << sd.g1 << ", g2 " << sd.g2 << ", base pieces "
              << sd.base.size() << ", rubber pieces " << sd.rubber.size() << ", enhancements " << units.size() << ", weight "
              << to_string(weight) << "\n";
    }
    r.json["splittings"] = splits;
    r.json["loci"] = loci;
    r.json["summary"] = Json{{"splittings", splittings.size()}, {"loci", label_count}};
    table << splittings.size() << " splittings, " << label_count << " locus labels\n";
    r.table = table.str();
    return r;
}

Report compute_report(const RunConfig& config)
{
    localizer::InvariantRequest request;
    request.gamma = gamma_from(config);
    request.split = split_options(config);
    const auto result = localizer::compute_invariant(request);

    Report r;
    r.json = header("compute");
    r.json["gamma"] = to_json(request.gamma);
    r.json["branch_points"] = request.gamma.branch_points();
    r.json["value"] = to_json(result.value);
    const bool matches = result.t_independent && result.localization_value == result.value;
    Json loc{{"total", to_json(result.localization_total)}, {"t_independent", result.t_independent}};
    loc["value"] = result.t_independent ? Json(to_json(result.localization_value)) : Json(nullptr);
    loc["matches"] = matches;
    r.json["localization"] = loc;
    Json loci = Json::array();
    for (std::size_t i = 0; i < result.contributions.size(); ++i) {
        Json c = to_json(result.contributions[i]);
        c["value"] = to_json(result.evaluated[i]);
        loci.push_back(c);
    }
    r.json["loci"] = loci;
    r.status = matches ? ExitCode::ok : ExitCode::mismatch;

    std::ostringstream table;
    table << "profile (" << join(request.gamma.contact) << "), genus 0, " << request.gamma.branch_points() << " branch points\n";
    table << "value                 " << to_string(result.value) << "\n";
    table << "localization total    " << result.localization_total.str() << "\n";
    table << "loci                  " << result.contributions.size() << "\n";
    table << "t-independent         " << (result.t_independent ? "yes" : "no") << "\n";
    table << "routes agree          " << (matches ? "yes" : "NO") << "\n";
    r.table = table.str();
    return r;
}

Report verify_report(const RunConfig& config)
{
    const int max_degree = require_max_degree(config, 3, 5, "verify");
    Report r;
    r.json = header("verify");
    r.json["max_degree"] = max_degree;
    Json hurwitz = Json::array();
    Json units = Json::array();
    bool all = true;
    std::ostringstream table;
    table << "profile      closed form   localization  oracle        match\n";
    for (const auto& alpha : partitions_up_to(max_degree)) {
        localizer::InvariantRequest request;
        request.gamma.degree = std::accumulate(alpha.begin(), alpha.end(), 0);
        request.gamma.contact = alpha;
        const auto result = localizer::compute_invariant(request);
        const Rational oracle = oracles::count_factorizations(oracles::FactorizationSpec{0, alpha});
        const bool match = result.t_independent && result.value == oracle && result.localization_value == oracle;
        all = all && match;
        hurwitz.push_back(Json{{"profile", alpha},
                               {"pipeline", to_json(result.value)},
                               {"localization", result.t_independent ? Json(to_json(result.localization_value)) : Json(nullptr)},
                               {"oracle", to_json(oracle)},
                               {"match", match}});
        char line[160];
        std::snprintf(line, sizeof line, "%-12s %-13s %-13s %-13s %s\n", join(alpha).c_str(), to_string(result.value).c_str(),
                      to_string(result.localization_value).c_str(), to_string(oracle).c_str(), match ? "yes" : "NO");
        table << line;

        std::vector<std::uint64_t> a64(alpha.begin(), alpha.end());
        const Integer count = logmonoid::count_enhancements(a64);
        const std::uint64_t orbits = oracles::orbit_count_units(a64);
        const Rational burnside = oracles::burnside_count_units(a64);
        const bool umatch = count == orbits && burnside == Rational(count) &&
                            logmonoid::enumerate_enhancements(a64).size() == orbits;
        all = all && umatch;
        units.push_back(Json{{"alpha", alpha},
                             {"count", count.str()},
                             {"orbits", orbits},
                             {"burnside", to_json(burnside)},
                             {"match", umatch}});
    }
    r.json["hurwitz"] = hurwitz;
    r.json["units"] = units;
    r.json["all_match"] = all;
    table << (all ? "all comparisons match\n" : "MISMATCH\n");
    r.table = table.str();
    r.status = all ? ExitCode::ok : ExitCode::mismatch;
    return r;
}

Report identities_report(const RunConfig& config)
{
    const int max_degree = require_max_degree(config, 4, 6, "identities");
    Report r;
    r.json = header("identities");
    r.json["max_degree"] = max_degree;
    r.json["seed"] = config.seed;
    bool all = true;
    std::ostringstream table;

    std::size_t checked = 0, passed = 0;
    Json tind = Json::array();
    for (const auto& alpha : partitions_up_to(max_degree)) {
        splitloci::DiscreteData gamma;
        gamma.degree = std::accumulate(alpha.begin(), alpha.end(), 0);
        gamma.contact = alpha;
        const auto contribs = localizer::assemble_contributions(gamma);
        for (const auto& c : contribs)
            if (c.is_composite()) {
                ++checked;
                passed += localizer::pushforward_check(c);
            }
        std::vector<eq::EqScalar> values;
        for (const auto& c : contribs) values.push_back(localizer::evaluate_contribution(c));
        eq::EqScalar total;
        for (const auto& v : values) total += v;
        const bool constant = total.is_constant();
        bool sensitive = true;
        for (const auto& v : values) {
            const eq::EqScalar dropped = total - v;
            sensitive = sensitive && !(dropped.is_constant() && dropped == total);
            if (gamma.branch_points() > 0) sensitive = sensitive && !dropped.is_constant();
        }
        all = all && constant && sensitive;
        tind.push_back(Json{{"profile", alpha},
                            {"loci", contribs.size()},
                            {"total", to_json(total)},
                            {"constant", constant},
                            {"every_drop_breaks", sensitive}});
    }
    all = all && checked == passed;
    r.json["pushforward"] = Json{{"checked", checked}, {"passed", passed}};
    r.json["t_independence"] = tind;
    table << "pushforward identity      " << passed << "/" << checked << "\n";

    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> kdist(0, 4);
    int pos = 0, neg = 0;
    const int trials = 100;
    for (int i = 0; i < trials; ++i) {
        auto inst = eq::random_glue_instance(rng, kdist(rng));
        pos += eq::ledger_glue_check(inst.t1, inst.t2, inst.k, inst.node_terms, inst.glued, inst.td);
        auto bad = eq::perturb_glue_instance(inst, rng);
        neg += !eq::ledger_glue_check(bad.t1, bad.t2, bad.k, bad.node_terms, bad.glued, bad.td);
    }
    all = all && pos == trials && neg == trials;
    r.json["ledger_glue"] = Json{{"positive", Json{{"trials", trials}, {"passed", pos}}},
                                 {"negative", Json{{"trials", trials}, {"rejected", neg}}}};
    table << "ledger glue               " << pos << "/" << trials << " pass, " << neg << "/" << trials << " controls rejected\n";

    int dim_ok = 0;
    const int dim_trials = 200;
    for (int i = 0; i < dim_trials; ++i) {
        auto inst = eq::random_dimension_instance(rng);
        auto res = eq::def_space_dim(inst.ext1, inst.m, inst.m2, inst.incidence, inst.boundary);
        dim_ok += res.boundary_surjective && res.dimension == inst.ext1 - inst.m2 + inst.m;
    }
    all = all && dim_ok == dim_trials;
    r.json["dimension_law"] = Json{{"trials", dim_trials}, {"passed", dim_ok}};
    table << "deformation dimension     " << dim_ok << "/" << dim_trials << "\n";

    r.json["all_passed"] = all;
    table << (all ? "all identities hold\n" : "FAILURE\n");
    r.table = table.str();
    r.status = all ? ExitCode::ok : ExitCode::mismatch;
    return r;
}

}  // namespace logloc::cli
