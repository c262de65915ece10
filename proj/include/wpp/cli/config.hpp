#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wpp::cli {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Flat key=value lines; blank lines and lines starting with '#' are ignored.
/// A key may repeat (point=...). Throws InvalidInput on a missing file or a
/// line without '='.
ConfigEntries parse_config(const std::string& text);
ConfigEntries read_config_file(const std::string& path);

/// Appends "--key value" for every config entry whose flag does not appear in
/// args. Keys listed in `flags` take true/false and become a bare "--key".
std::vector<std::string> merge_config(std::vector<std::string> args, const ConfigEntries& entries,
                                      const std::set<std::string>& flags);

/// "lo..hi" or a single integer.
std::pair<int, int> parse_int_range(const std::string& text);
/// Comma separated integers and ranges, e.g. "1,2,5..7". Order kept.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace wpp::cli
