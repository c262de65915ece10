#include "wpp/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wpp/errors.hpp"

namespace wpp::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  int value = 0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || end != t.data() + t.size()) {
    throw InvalidInput("not an integer: '" + text + "'");
  }
  return value;
}

bool mentions(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

}  // namespace

ConfigEntries parse_config(const std::string& text) {
  ConfigEntries out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || trim(t.substr(0, eq)).empty()) {
      throw InvalidInput("config line " + std::to_string(number) + ": expected key=value");
    }
    out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return out;
}

ConfigEntries read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::vector<std::string> merge_config(std::vector<std::string> args, const ConfigEntries& entries,
                                      const std::set<std::string>& flags) {
  const std::vector<std::string> given = args;
  for (const auto& [key, value] : entries) {
    const std::string flag = "--" + key;
    if (mentions(given, flag)) continue;
    if (flags.count(key) != 0) {
      if (value == "true") {
        args.push_back(flag);
      } else if (value != "false") {
        throw InvalidInput("config key " + key + " takes true or false");
      }
      continue;
    }
    args.push_back(flag);
    args.push_back(value);
  }
  return args;
}

std::pair<int, int> parse_int_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw InvalidInput("empty range " + text);
  return {lo, hi};
}

std::vector<int> parse_int_list(const std::string& text) {
  if (trim(text).empty()) throw InvalidInput("empty integer list");
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto [lo, hi] = parse_int_range(text.substr(start, comma - start));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace wpp::cli
