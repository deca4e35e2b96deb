#include "logloc/cli.hpp"

#include "logloc/config_file.hpp"
#include "logloc/errors.hpp"
#include "reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace logloc::cli {

namespace {

std::vector<int> parse_profile(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v <= 0) throw UsageError("invalid partition '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("invalid partition '" + text + "'");
    return out;
}

template <class T>
const T& expect(const ConfigValue& v, const std::string& key)
{
    if (const T* p = std::get_if<T>(&v)) return *p;
    throw UsageError("config key '" + key + "' has the wrong type");
}

int expect_int(const ConfigValue& v, const std::string& key)
{
    return static_cast<int>(expect<std::int64_t>(v, key));
}

void apply_config(const ConfigTable& table, RunConfig& cfg)
{
    for (const auto& [key, value] : table) {
        if (key == "command")
            cfg.command = expect<std::string>(value, key);
        else if (key == "genus")
            cfg.genus = expect_int(value, key);
        else if (key == "degree")
            cfg.degree = expect_int(value, key);
        else if (key == "profile") {
            if (const auto* s = std::get_if<std::string>(&value))
                cfg.profile = parse_profile(*s);
            else {
                cfg.profile.clear();
                for (auto x : expect<std::vector<std::int64_t>>(value, key)) {
                    if (x <= 0) throw UsageError("config profile entries must be positive");
                    cfg.profile.push_back(static_cast<int>(x));
                }
            }
        } else if (key == "marks")
            cfg.marks = expect_int(value, key);
        else if (key == "max_degree")
            cfg.max_degree = expect_int(value, key);
        else if (key == "format")
            cfg.format = expect<std::string>(value, key);
        else if (key == "output")
            cfg.output = expect<std::string>(value, key);
        else if (key == "connected_only")
            cfg.connected_only = expect<bool>(value, key);
        else if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(expect<std::int64_t>(value, key));
        else
            throw UsageError("unknown config key '" + key + "'");
    }
}

struct HelpRequested {
    std::string text;
};

}  // namespace

RunConfig parse_arguments(const std::vector<std::string>& args)
{
    CLI::App app{"Exact localization engine for log stable maps to (P^1, infinity)", "logloc"};
    std::string command, profile, format, output, config_path;
    int genus = 0, degree = 0, marks = 0, max_degree = 0;
    std::uint64_t seed = 0;
    bool connected_only = false;
    app.add_option("command", command, "enumerate | compute | verify | identities")
        ->check(CLI::IsMember({"enumerate", "compute", "verify", "identities"}));
    auto* o_genus = app.add_option("--genus", genus, "Genus of the source curve");
    auto* o_degree = app.add_option("--degree", degree, "Degree of the map (defaults to the profile sum)");
    auto* o_profile = app.add_option("--profile", profile, "Contact profile over infinity, comma-separated");
    auto* o_marks = app.add_option("--marks", marks, "Number of interior marked points");
    auto* o_max = app.add_option("--max-degree", max_degree, "Degree bound for verify/identities and enumeration");
    auto* o_format = app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    auto* o_output = app.add_option("--output", output, "Write the report to this path");
    auto* o_seed = app.add_option("--seed", seed, "Seed for randomized identity checks");
    auto* o_conn = app.add_flag("--connected-only", connected_only, "Restrict both sides of a splitting to connected curves");
    app.add_option("--config", config_path, "TOML file with the same keys; flags take precedence");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    if (!config_path.empty()) apply_config(load_config(config_path), cfg);
    if (!command.empty()) cfg.command = command;
    if (o_genus->count()) cfg.genus = genus;
    if (o_degree->count()) cfg.degree = degree;
    if (o_profile->count()) cfg.profile = parse_profile(profile);
    if (o_marks->count()) cfg.marks = marks;
    if (o_max->count()) cfg.max_degree = max_degree;
    if (o_format->count()) cfg.format = format;
    if (o_output->count()) cfg.output = output;
    if (o_seed->count()) cfg.seed = seed;
    if (o_conn->count()) cfg.connected_only = connected_only;

    if (cfg.command.empty()) throw UsageError("no command given (enumerate, compute, verify, identities)");
    if (cfg.command != "enumerate" && cfg.command != "compute" && cfg.command != "verify" && cfg.command != "identities")
        throw UsageError("unknown command '" + cfg.command + "'");
    if (cfg.format != "json" && cfg.format != "table") throw UsageError("--format must be json or table");
    return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Report report;
    try {
        if (config.command == "enumerate")
            report = enumerate_report(config);
        else if (config.command == "compute")
            report = compute_report(config);
        else if (config.command == "verify")
            report = verify_report(config);
        else if (config.command == "identities")
            report = identities_report(config);
        else
            throw UsageError("unknown command '" + config.command + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const ResourceError& e) {
        err << "resource bound: " << e.what() << "\n";
        return ExitCode::resource;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return ExitCode::usage;
    }

    const std::string body = config.format == "json" ? report.json.dump(2) + "\n" : report.table;
    if (config.output.empty()) {
        out << body;
    } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) {
            err << "cannot write " << config.output << "\n";
            return ExitCode::usage;
        }
        file << body;
    }
    return report.status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    try {
        config = parse_arguments(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return ExitCode::ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitCode::usage;
    }
    return run(config, out, err);
}

}  // namespace logloc::cli
