#include "wpp/cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wpp/errors.hpp"

namespace wpp::cli {

namespace {

bool is_key(const std::string& s) {
  if (s.size() != 32) return false;
  for (char ch : s) {
    if (!((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f'))) return false;
  }
  return true;
}

// Holds an exclusive flock for its lifetime.
class LockedAppend {
 public:
  explicit LockedAppend(const std::string& path) : fd_(::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644)) {
    if (fd_ < 0) throw InvalidInput("cannot open cache file " + path);
    ::flock(fd_, LOCK_EX);
  }
  ~LockedAppend() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  LockedAppend(const LockedAppend&) = delete;
  LockedAppend& operator=(const LockedAppend&) = delete;

  void write(const std::string& text) {
    std::size_t done = 0;
    while (done < text.size()) {
      const auto n = ::write(fd_, text.data() + done, text.size() - done);
      if (n <= 0) throw InvariantViolation("short write to cache file");
      done += static_cast<std::size_t>(n);
    }
  }

 private:
  int fd_;
};

}  // namespace

FileRankStore::FileRankStore(std::string path, std::ostream* warnings)
    : path_(std::move(path)), warnings_(warnings != nullptr ? warnings : &std::cerr) {
  std::ifstream in(path_);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string key, extra;
    long long h0 = -1, rank = -1;
    if (!(fields >> key >> h0 >> rank) || (fields >> extra) || !is_key(key) || h0 < 0 || rank < 0) {
      *warnings_ << "cache " << path_ << ": skipping corrupt line " << number << "\n";
      ++skipped_;
      continue;
    }
    const Entry entry{static_cast<std::size_t>(h0), static_cast<std::size_t>(rank)};
    auto [it, inserted] = entries_.emplace(key, entry);
    if (!inserted && (it->second.h0 != entry.h0 || it->second.rank != entry.rank)) {
      *warnings_ << "cache " << path_ << ": skipping conflicting line " << number << "\n";
      ++skipped_;
    }
  }
}

std::optional<std::size_t> FileRankStore::find_rank(const std::string& key) {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second.rank;
}

void FileRankStore::record(const std::string& key, std::size_t h0, std::size_t rank) {
  std::lock_guard lock(mutex_);
  if (!entries_.emplace(key, Entry{h0, rank}).second) return;
  LockedAppend file(path_);
  file.write(key + " " + std::to_string(h0) + " " + std::to_string(rank) + "\n");
}

std::size_t FileRankStore::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t FileRankStore::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

std::size_t FileRankStore::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace wpp::cli
