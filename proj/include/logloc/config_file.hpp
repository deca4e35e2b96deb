#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace logloc::cli {

/// Values of the flat TOML subset accepted in config files.
using ConfigValue = std::variant<std::int64_t, bool, std::string, std::vector<std::int64_t>, std::vector<std::string>>;
using ConfigTable = std::map<std::string, ConfigValue>;

/// Parses `key = value` lines: integers, booleans, basic strings, and one-line arrays of
/// integers or strings. Comments start with '#'. A single optional [logloc] table header is accepted.
ConfigTable parse_config(const std::string& text);
ConfigTable load_config(const std::string& path);

}  // namespace logloc::cli
