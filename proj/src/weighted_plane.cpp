#include "wpp/weighted_plane.hpp"

#include <algorithm>
#include <numeric>

#include "wpp/errors.hpp"

namespace wpp {

WeightedPlane::WeightedPlane(int a, int b, int c) : a_(a), b_(b), c_(c) {
  if (a <= 0 || b <= 0 || c <= 0) {
    throw InvalidInput("weights must be positive, got " + to_string());
  }
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
    throw InvalidInput("weights must be pairwise coprime, got " + to_string());
  }
}

int WeightedPlane::min_weight() const { return std::min({a_, b_, c_}); }

std::string WeightedPlane::to_string() const {
  return std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_);
}

std::vector<Monomial> enumerate_monomials(const WeightedPlane& plane, std::int64_t n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  const std::int64_t a = plane.a(), b = plane.b(), c = plane.c();
  for (std::int64_t k = 0; c * k <= n; ++k) {
    for (std::int64_t j = 0; c * k + b * j <= n; ++j) {
      const std::int64_t rest = n - c * k - b * j;
      if (rest % a == 0) out.push_back({static_cast<int>(rest / a), static_cast<int>(j), static_cast<int>(k)});
    }
  }
  return out;
}

std::size_t dim_S(const WeightedPlane& plane, std::int64_t n) {
  if (n < 0) return 0;
  const std::int64_t a = plane.a(), b = plane.b(), c = plane.c();
  std::size_t count = 0;
  for (std::int64_t k = 0; c * k <= n; ++k) {
    for (std::int64_t j = 0; c * k + b * j <= n; ++j) {
      if ((n - c * k - b * j) % a == 0) ++count;
    }
  }
  return count;
}

bool is_cartier(const WeightedPlane& plane, std::int64_t n) { return n % plane.abc() == 0; }

std::string format_monomial(const Monomial& mono) {
  std::string out;
  auto factor = [&](const char* var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  factor("x", mono.i);
  factor("y", mono.j);
  factor("z", mono.k);
  return out.empty() ? "1" : out;
}

}  // namespace wpp
