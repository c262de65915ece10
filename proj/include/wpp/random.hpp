#pragma once

#include <cstdint>
#include <random>

namespace wpp {

/// All randomness in the project: std::mt19937_64 seeded directly with a
/// 64-bit seed, with bounded draws by rejection sampling on the raw 64-bit
/// output so results do not depend on the standard library's distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi]; lo <= hi.
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer over (seed, stream); used for per-attempt sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace wpp
