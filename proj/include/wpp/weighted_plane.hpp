#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wpp {

/// Exponents of x^i y^j z^k.
struct Monomial {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Order used for columns everywhere: ascending z-exponent, then ascending
/// y-exponent (so x^n comes first in each z-layer).
inline bool monomial_order_less(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.k != rhs.k) return lhs.k < rhs.k;
  if (lhs.j != rhs.j) return lhs.j < rhs.j;
  return lhs.i < rhs.i;
}

/// The weighted projective plane P(a,b,c) with pairwise coprime weights.
class WeightedPlane {
 public:
  /// Throws InvalidInput unless a, b, c are positive and pairwise coprime.
  WeightedPlane(int a, int b, int c);

  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  std::int64_t abc() const { return static_cast<std::int64_t>(a_) * b_ * c_; }
  /// lcm(a,b,c); equal to abc for coprime weights.
  std::int64_t lcm() const { return abc(); }
  /// a + b + c; the canonical class is -kappa*A + sum E_i.
  int kappa() const { return a_ + b_ + c_; }
  int min_weight() const;

  std::int64_t degree(const Monomial& mono) const {
    return static_cast<std::int64_t>(a_) * mono.i + static_cast<std::int64_t>(b_) * mono.j +
           static_cast<std::int64_t>(c_) * mono.k;
  }

  /// "a,b,c"
  std::string to_string() const;

  friend bool operator==(const WeightedPlane&, const WeightedPlane&) = default;

 private:
  int a_;
  int b_;
  int c_;
};

/// All monomials of weighted degree n, in monomial_order_less order. Empty for n < 0.
std::vector<Monomial> enumerate_monomials(const WeightedPlane& plane, std::int64_t n);

/// Number of monomials of weighted degree n.
std::size_t dim_S(const WeightedPlane& plane, std::int64_t n);

/// O(n) is invertible exactly when abc divides n.
bool is_cartier(const WeightedPlane& plane, std::int64_t n);

/// Human-readable monomial, e.g. "x^2*y".
std::string format_monomial(const Monomial& mono);

}  // namespace wpp
