#pragma once

#include <cstddef>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "wpp/linear_systems.hpp"

namespace wpp::cli {

/// Condition ranks persisted as an append-only text file, one
/// "key h0 rank" record per line. Corrupt lines are skipped with a warning.
/// Appends are serialized by a mutex in-process and flock across processes.
class FileRankStore : public RankStore {
 public:
  explicit FileRankStore(std::string path, std::ostream* warnings = nullptr);

  std::optional<std::size_t> find_rank(const std::string& key) override;
  void record(const std::string& key, std::size_t h0, std::size_t rank) override;

  std::size_t hits() const;
  std::size_t misses() const;
  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }

 private:
  struct Entry {
    std::size_t h0 = 0;
    std::size_t rank = 0;
  };

  std::string path_;
  std::ostream* warnings_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Entry> entries_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  std::size_t skipped_ = 0;
};

}  // namespace wpp::cli
