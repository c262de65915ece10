#include "wpp/nagata.hpp"

#include <algorithm>

#include "wpp/errors.hpp"
#include "wpp/random.hpp"

namespace wpp {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f != 0) continue;
    out.push_back(f);
    while (q % f == 0) q /= f;
  }
  if (q > 1) out.push_back(q);
  return out;
}

Rational residue(std::uint64_t v) {
  BigInt big;
  mpz_import(big.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return Rational(big);
}

bool same_projective_point(const PrimeField& f, const std::array<std::uint64_t, 3>& p,
                           const std::array<std::uint64_t, 3>& q) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (f.mul(p[i], q[j]) != f.mul(p[j], q[i])) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t smallest_split_prime(std::int64_t abc, std::uint64_t floor) {
  if (abc <= 0) throw InvalidInput("abc must be positive");
  const auto step = static_cast<std::uint64_t>(abc);
  std::uint64_t p = 1;
  if (floor > 1) p += (floor - 1 + step - 1) / step * step;
  while (!is_prime_u64(p)) p += step;
  return p;
}

std::uint64_t primitive_root_of_unity(std::uint64_t q, std::uint64_t p) {
  if (q == 0 || (p - 1) % q != 0) {
    throw InvalidInput(std::to_string(q) + " does not divide " + std::to_string(p) + " - 1");
  }
  const PrimeField f(p);
  const auto factors = prime_factors(q);
  for (std::uint64_t h = 2; h < p; ++h) {
    const std::uint64_t zeta = f.pow(h, (p - 1) / q);
    bool exact = true;
    for (auto r : factors) exact = exact && f.pow(zeta, q / r) != 1;
    if (exact) return zeta;
  }
  return 1;  // q == 1
}

OrbitScheme orbit_points(const WeightedPlane& plane, const UpstreamPoint& point, std::uint64_t p) {
  const auto abc = static_cast<std::uint64_t>(plane.abc());
  const PrimeField f(p);
  if ((p - 1) % abc != 0) {
    throw InvalidInput("F_" + std::to_string(p) + " lacks the roots of unity of order " + plane.to_string() +
                       " (need abc | p - 1)");
  }
  std::array<std::uint64_t, 3> base{};
  for (int i = 0; i < 3; ++i) {
    base[i] = f.from_rational(point.coords[i]);
    if (base[i] == 0) throw InvalidInput("point " + point.to_string() + " has a coordinate vanishing mod p");
  }
  const std::array<int, 3> weights = {plane.a(), plane.b(), plane.c()};
  std::array<std::uint64_t, 3> zeta{};
  for (int i = 0; i < 3; ++i) zeta[i] = primitive_root_of_unity(static_cast<std::uint64_t>(weights[i]), p);

  OrbitScheme orbit;
  orbit.prime = p;
  orbit.source = point;
  std::vector<std::array<std::uint64_t, 3>> raw;
  for (int i = 0; i < weights[0]; ++i) {
    for (int j = 0; j < weights[1]; ++j) {
      for (int k = 0; k < weights[2]; ++k) {
        const std::array<std::uint64_t, 3> q = {f.mul(f.pow(zeta[0], i), base[0]), f.mul(f.pow(zeta[1], j), base[1]),
                                                f.mul(f.pow(zeta[2], k), base[2])};
        for (const auto& prev : raw) {
          if (same_projective_point(f, prev, q)) throw InvariantViolation("two orbit points coincide");
        }
        raw.push_back(q);
        orbit.points.push_back(UpstreamPoint{{residue(q[0]), residue(q[1]), residue(q[2])}});
      }
    }
  }
  if (orbit.points.size() != abc) throw InvariantViolation("orbit size differs from abc");
  return orbit;
}

FatPointScheme upstream_scheme(const FatPointScheme& scheme, std::uint64_t p) {
  std::vector<UpstreamPoint> points;
  std::vector<int> mults;
  for (std::size_t i = 0; i < scheme.r(); ++i) {
    for (auto& q : orbit_points(scheme.plane(), scheme.points()[i], p).points) {
      points.push_back(std::move(q));
      mults.push_back(scheme.multiplicities()[i]);
    }
  }
  return FatPointScheme(WeightedPlane(1, 1, 1), std::move(points), std::move(mults), FieldSpec::prime_field(p));
}

std::size_t orbit_invariant_h0(const FatPointScheme& scheme, std::uint64_t p, int n, int m) {
  if (n < 0) return 0;
  const auto& plane = scheme.plane();
  std::vector<UpstreamExponents> columns;
  for (const auto& mono : enumerate_monomials(WeightedPlane(1, 1, 1), n)) {
    if (mono.i % plane.a() == 0 && mono.j % plane.b() == 0 && mono.k % plane.c() == 0) {
      columns.push_back({mono.i, mono.j, mono.k});
    }
  }
  std::vector<UpstreamPoint> points;
  std::vector<int> orders;
  for (std::size_t i = 0; i < scheme.r(); ++i) {
    for (auto& q : orbit_points(plane, scheme.points()[i], p).points) {
      points.push_back(std::move(q));
      orders.push_back(m * scheme.multiplicities()[i]);
    }
  }
  const PrimeField f(p);
  const auto matrix = hasse_conditions(f, std::span<const UpstreamExponents>(columns),
                                       std::span<const UpstreamPoint>(points), std::span<const int>(orders));
  return columns.size() - rank(matrix);
}

BasechangeRow basechange_check(const FatPointScheme& scheme, int m, std::uint64_t p, const EvalOptions& opts) {
  BasechangeRow row;
  row.m = m;
  row.shift = scheme.plane().kappa() - 3;
  row.downstream_reg = regularity(scheme.with_field(FieldSpec::prime_field(p)), m, opts);
  row.upstream_reg = regularity(upstream_scheme(scheme, p), m, opts);
  row.holds = row.upstream_reg == row.downstream_reg + row.shift;
  return row;
}

VanishingProbeReport nagata_vanishing_probe(std::size_t n_points, const std::vector<int>& m_list, std::uint64_t seed,
                                            const FieldSpec& field, const EvalOptions& opts) {
  if (n_points == 0) throw InvalidInput("the probe needs at least one point");
  const WeightedPlane plane(1, 1, 1);
  VanishingProbeReport report;
  report.n_points = n_points;
  report.seed = seed;
  report.field = field;
  std::vector<std::optional<FatPointScheme>> point_sets(kMaxAttempts);
  auto scheme_for = [&](int attempt) -> const FatPointScheme& {
    auto& slot = point_sets[static_cast<std::size_t>(attempt)];
    if (!slot) {
      slot.emplace(plane, random_points(plane, field, n_points, derive_seed(seed, static_cast<std::uint64_t>(attempt))),
                   std::vector<int>{}, field);
    }
    return *slot;
  };
  for (int m : m_list) {
    if (m < 1) throw InvalidInput("probe multiplicities must be >= 1");
    VanishingResult result;
    result.m = m;
    BigInt bound;
    const BigInt radicand = BigInt(static_cast<unsigned long>(n_points)) * m * m;
    mpz_sqrt(bound.get_mpz_t(), radicand.get_mpz_t());
    result.bound_d = static_cast<int>(bound.get_si());
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const auto& scheme = scheme_for(attempt);
      result.attempts = attempt + 1;
      result.violation_d.reset();
      for (int d = 0; d <= result.bound_d; ++d) {
        const std::size_t h = h0(scheme, d, m, opts);
        if (h > 0) {
          result.violation_d = d;
          result.h0_at_violation = h;
          break;
        }
      }
      if (!result.violation_d) break;
      const auto dim = static_cast<std::int64_t>(dim_S(plane, *result.violation_d));
      const auto expected = static_cast<std::size_t>(std::max<std::int64_t>(
          0, dim - static_cast<std::int64_t>(scheme.condition_count(m))));
      if (result.h0_at_violation <= expected) break;  // forced by counting, re-drawing cannot help
      if (attempt + 1 < kMaxAttempts) {
        result.redraws.push_back({attempt + 1, derive_seed(seed, static_cast<std::uint64_t>(attempt + 1)),
                                  *result.violation_d, result.h0_at_violation, expected});
      }
    }
    report.violated = report.violated || result.violation_d.has_value();
    report.per_m.push_back(std::move(result));
  }
  report.verdict = report.violated ? "violation" : "no violation";
  return report;
}

PropNagataReport prop_nagata_report(const WeightedPlane& plane, std::size_t r, std::uint64_t seed, int m_max,
                                    const FieldSpec& field, const EvalOptions& opts) {
  if (r == 0) throw InvalidInput("r must be >= 1");
  if (m_max < 1) throw InvalidInput("m_max must be >= 1");
  PropNagataReport report;
  report.plane = plane;
  report.r = r;
  report.seed = seed;
  report.field = field;
  report.points = random_points(plane, field, r, derive_seed(seed, 0));
  const FatPointScheme scheme(plane, report.points, {}, field);
  const auto ds = d_min_series(scheme, m_max, opts);
  for (int m = 1; m <= m_max; ++m) {
    PropNagataRow row;
    row.m = m;
    row.d_min = ds[static_cast<std::size_t>(m - 1)];
    row.sqrt_bound_sq = plane.abc() * scheme.u() * m * m;
    row.negative = is_negative_class(scheme, row.d_min, m);
    report.per_m.push_back(row);
  }
  const auto first = std::find_if(report.per_m.begin(), report.per_m.end(), [](const auto& row) { return row.negative; });
  if (first != report.per_m.end()) {
    report.certificate = negative_curve_search(scheme, first->m, opts);
    report.verdict = "negative curve exists; no Nagata conclusion";
  } else {
    report.verdict = "no E-uniform negative curve for m <= " + std::to_string(m_max) +
                     " (bounded search only); absence for every m would give Nagata's conjecture for " +
                     std::to_string(report.n_points()) + " general points";
  }
  return report;
}

}  // namespace wpp
