#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpp/asymptotics.hpp"
#include "wpp/linear_systems.hpp"

namespace wpp {

/// Smallest prime p >= floor with abc | p - 1.
std::uint64_t smallest_split_prime(std::int64_t abc, std::uint64_t floor);

/// A primitive q-th root of unity in F_p (q | p - 1): h^((p-1)/q) for the
/// least h >= 2 for which that power has exact order q.
std::uint64_t primitive_root_of_unity(std::uint64_t q, std::uint64_t p);

/// The abc preimages of one point under the covering u^a, v^b, w^c.
struct OrbitScheme {
  std::uint64_t prime = 0;
  UpstreamPoint source;
  /// (zeta_a^i u : zeta_b^j v : zeta_c^k w), i < a, j < b, k < c, i outermost.
  std::vector<UpstreamPoint> points;
};

/// Throws InvalidInput unless abc | p - 1 and the point has nonzero
/// coordinates in F_p; throws InvariantViolation if two preimages coincide.
OrbitScheme orbit_points(const WeightedPlane& plane, const UpstreamPoint& point, std::uint64_t p);

/// The fat point scheme on the ordinary plane formed by the orbits of all
/// points of `scheme`, each preimage carrying its point's multiplicity.
FatPointScheme upstream_scheme(const FatPointScheme& scheme, std::uint64_t p);

/// Degree-n ordinary forms supported on monomials u^(ai) v^(bj) w^(ck) that
/// vanish to order m e_i at every preimage of every point, over F_p.
std::size_t orbit_invariant_h0(const FatPointScheme& scheme, std::uint64_t p, int n, int m);

struct BasechangeRow {
  int m = 0;
  int downstream_reg = 0;
  int upstream_reg = 0;
  int shift = 0;
  bool holds = false;
};

/// reg of the orbit scheme on the ordinary plane against reg(I^(m)) + a+b+c-3,
/// both computed over F_p.
BasechangeRow basechange_check(const FatPointScheme& scheme, int m, std::uint64_t p, const EvalOptions& opts = {});

struct Redraw {
  int attempt = 0;
  std::uint64_t seed = 0;
  int degree = 0;
  std::size_t h0 = 0;
  std::size_t expected_h0 = 0;
};

struct VanishingResult {
  int m = 0;
  /// isqrt(n m^2): degrees 0..bound_d are checked.
  int bound_d = 0;
  std::optional<int> violation_d;
  std::size_t h0_at_violation = 0;
  int attempts = 1;
  std::vector<Redraw> redraws;
};

struct VanishingProbeReport {
  std::size_t n_points = 0;
  std::uint64_t seed = 0;
  FieldSpec field = FieldSpec::default_prime();
  std::vector<VanishingResult> per_m;
  bool violated = false;
  std::string verdict;
};

/// Checks [I_q1^m cap ... cap I_qn^m]_d = 0 for d <= sqrt(n) m at seeded
/// random simple points of the ordinary plane. Attempt k uses the point set
/// drawn from derive_seed(seed, k); a set is re-drawn only while the
/// offending system is rank deficient, at most kMaxAttempts times in total.
VanishingProbeReport nagata_vanishing_probe(std::size_t n_points, const std::vector<int>& m_list, std::uint64_t seed,
                                            const FieldSpec& field, const EvalOptions& opts = {});

inline constexpr int kMaxAttempts = 4;

struct PropNagataRow {
  int m = 0;
  int d_min = 0;
  std::int64_t sqrt_bound_sq = 0;
  bool negative = false;
};

struct PropNagataReport {
  WeightedPlane plane{1, 1, 1};
  std::size_t r = 0;
  std::uint64_t seed = 0;
  FieldSpec field = FieldSpec::default_prime();
  std::vector<UpstreamPoint> points;
  std::vector<PropNagataRow> per_m;
  std::optional<NegativeCurveCertificate> certificate;
  std::string verdict;

  std::int64_t n_points() const { return plane.abc() * static_cast<std::int64_t>(r); }
};

/// Bounded search for E-uniform negative curves at r seeded random simple
/// points of P(a,b,c). Absence only ever counts as bounded-search evidence.
PropNagataReport prop_nagata_report(const WeightedPlane& plane, std::size_t r, std::uint64_t seed, int m_max,
                                    const FieldSpec& field, const EvalOptions& opts = {});

}  // namespace wpp
