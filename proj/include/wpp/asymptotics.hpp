#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpp/linear_systems.hpp"

namespace wpp {

/// a_2(I^m): the largest n with h1(n, m) != 0. Throws InvariantViolation if
/// h1 does not vanish from the cap N(m) on. A hint (expected a_2) narrows
/// the search; the result does not depend on it.
int a2(const FatPointScheme& scheme, int m, const EvalOptions& opts = {}, std::optional<int> hint = std::nullopt);

/// Same value by scanning n downward from the cap one step at a time.
int a2_linear_scan(const FatPointScheme& scheme, int m, const EvalOptions& opts = {});

/// reg(I^(m)) = a_2 + 2.
int regularity(const FatPointScheme& scheme, int m, const EvalOptions& opts = {},
               std::optional<int> hint = std::nullopt);

/// reg(I^(m)) for m = 1..m_max (index m - 1); cells run on opts.jobs workers.
std::vector<int> regularity_series(const FatPointScheme& scheme, int m_max, const EvalOptions& opts = {});

/// d_min(m) for m = 1..m_max (index m - 1).
std::vector<int> d_min_series(const FatPointScheme& scheme, int m_max, const EvalOptions& opts = {});

/// An effective class dA - m0 E with d^2 < abc u m0^2. The s value is a
/// candidate only: irreducibility of the witness is not checked.
struct NegativeCurveCertificate {
  int d = 0;
  int m0 = 0;
  Rational self_int;
  /// abc u m0 / d, the slope whose boundary class is orthogonal to dA - m0 E.
  Rational s_candidate;
  WeightedForm witness;
  std::size_t h0_at_class = 0;
};

/// Whether dA - mE has negative self-intersection: d^2 < abc u m^2.
bool is_negative_class(const FatPointScheme& scheme, std::int64_t d, std::int64_t m);

/// First m in 1..m_max whose minimal effective degree gives a negative class.
std::optional<NegativeCurveCertificate> negative_curve_search(const FatPointScheme& scheme, int m_max,
                                                              const EvalOptions& opts = {});

/// Either an exact rational slope or the irrational sqrt(abc u).
class Slope {
 public:
  static Slope exact(Rational value) { return Slope(std::move(value)); }
  static Slope sqrt_abcu() { return Slope(); }

  bool is_sqrt() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  /// floor(s m); for sqrt(abcu) computed as isqrt(abcu m^2).
  BigInt floor_times(std::int64_t m, std::int64_t abcu) const;
  /// "sqrt(abcu)" or the rational.
  std::string to_string() const;

 private:
  Slope() = default;
  explicit Slope(Rational value) : value_(std::move(value)) {}

  std::optional<Rational> value_;
};

struct SigmaEntry {
  int m = 0;
  std::int64_t reg = 0;
  std::int64_t floor_sm = 0;
  std::int64_t sigma = 0;
};

struct SigmaSeries {
  Slope s = Slope::sqrt_abcu();
  std::int64_t abcu = 0;
  std::vector<SigmaEntry> entries;
  std::optional<int> period;
  /// max |sigma| over the entries.
  std::int64_t bound = 0;
};

/// sigma(m) = reg(m) - floor(s m) from an already computed regularity list
/// (index m - 1).
SigmaSeries sigma_from_regularity(const Slope& s, std::int64_t abcu, const std::vector<int>& regs);

SigmaSeries sigma_series(const FatPointScheme& scheme, const Slope& s, int m_max, const EvalOptions& opts = {});

/// Smallest P <= p_max with sigma(m + P) = sigma(m) for all m in
/// [tail_start, m_max - P], requiring tail_start + P <= m_max.
std::optional<int> detect_period(const SigmaSeries& series, int p_max, int tail_start);

/// min over m <= m_max of d_min(m) / m.
Rational tau_upper_bound(const FatPointScheme& scheme, int m_max, const EvalOptions& opts = {});

struct SInvariantReport {
  std::int64_t abcu = 0;
  std::optional<NegativeCurveCertificate> certificate;
  /// reg(m), index m - 1.
  std::vector<int> regs;
  SigmaSeries sigma;
  bool consistent = false;
  std::string verdict;
};

/// Lower bound sqrt(abcu), reg(m)/m for m <= m_max, the candidate from a
/// negative curve if one is found, and whether sigma stays bounded on the window.
SInvariantReport s_invariant(const FatPointScheme& scheme, int m_max, const EvalOptions& opts = {});

}  // namespace wpp
