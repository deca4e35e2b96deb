#include "logloc/config_file.hpp"

#include "logloc/cli.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace logloc::cli {

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

/// Drops a trailing comment that is not inside a string.
std::string strip_comment(const std::string& line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

std::string parse_string(const std::string& raw, int line_no)
{
    if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"')
        throw UsageError("config line " + std::to_string(line_no) + ": malformed string " + raw);
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
        if (raw[i] == '\\' && i + 2 < raw.size()) {
            char c = raw[++i];
            out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
        } else {
            out += raw[i];
        }
    }
    return out;
}

std::int64_t parse_int(const std::string& raw, int line_no)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != raw.size() || raw.empty()) throw UsageError("config line " + std::to_string(line_no) + ": not an integer: " + raw);
    return v;
}

ConfigValue parse_value(const std::string& raw, int line_no)
{
    if (raw == "true") return true;
    if (raw == "false") return false;
    if (!raw.empty() && raw.front() == '"') return parse_string(raw, line_no);
    if (!raw.empty() && raw.front() == '[') {
        if (raw.back() != ']') throw UsageError("config line " + std::to_string(line_no) + ": unterminated array");
        std::string body = trim(raw.substr(1, raw.size() - 2));
        std::vector<std::string> items;
        std::string cur;
        bool quoted = false;
        for (char c : body) {
            if (c == '"') quoted = !quoted;
            if (c == ',' && !quoted) {
                items.push_back(trim(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!trim(cur).empty()) items.push_back(trim(cur));
        if (!items.empty() && items.front().front() == '"') {
            std::vector<std::string> out;
            for (const auto& it : items) out.push_back(parse_string(it, line_no));
            return out;
        }
        std::vector<std::int64_t> out;
        for (const auto& it : items) out.push_back(parse_int(it, line_no));
        return out;
    }
    return parse_int(raw, line_no);
}

}  // namespace

ConfigTable parse_config(const std::string& text)
{
    ConfigTable table;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line != "[logloc]" || seen_header || !table.empty())
                throw UsageError("config line " + std::to_string(line_no) + ": only a leading [logloc] table is supported");
            seen_header = true;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        for (char& c : key)
            if (c == '-') c = '_';
        if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
        if (table.count(key)) throw UsageError("config line " + std::to_string(line_no) + ": duplicate key " + key);
        table[key] = parse_value(trim(line.substr(eq + 1)), line_no);
    }
    return table;
}

ConfigTable load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace logloc::cli
