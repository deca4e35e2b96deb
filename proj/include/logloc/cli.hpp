#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logloc::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, resource = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int genus = 0;
    std::optional<int> degree;
    std::vector<int> profile;
    int marks = 0;
    std::optional<int> max_degree;
    bool connected_only = false;
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 20240601;
};

/// Parses argv-style arguments (without the program name); a --config file is read first and
/// explicitly given flags override it.
RunConfig parse_arguments(const std::vector<std::string>& args);

/// Runs one command, writing the report to `out` (or to config.output) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_arguments + run, mapping errors to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logloc::cli
