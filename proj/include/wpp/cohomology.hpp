#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "wpp/linear_systems.hpp"

namespace wpp {

/// The class nA - mE on the blowup, E = sum e_i E_i.
struct DivisorClass {
  std::int64_t n = 0;
  std::int64_t m = 0;
};

/// Intersection pairing: n1 n2 / abc - m1 m2 u.
Rational pair(const DivisorClass& d1, const DivisorClass& d2, const WeightedPlane& plane, std::int64_t u);

/// Riemann-Roch value (1/2) D.(D - K) + 1 with K = -(a+b+c)A + sum E_i.
/// Integral, and equal to the Euler characteristic, on Cartier classes.
Rational chi_rr(const DivisorClass& d, const FatPointScheme& scheme);

/// dim_S(-n - (a+b+c)).
std::size_t h2(const WeightedPlane& plane, std::int64_t n);

/// Cokernel dimension of evaluation on the fat point scheme: L(m) - rank.
std::size_t h1(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts = {});

/// N(m) = abc * m * sum e_i - 1; h1 vanishes from here on.
std::int64_t h1_cap(const FatPointScheme& scheme, int m);

struct CohomologyRecord {
  int n = 0;
  int m = 0;
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::int64_t chi = 0;

  friend bool operator==(const CohomologyRecord&, const CohomologyRecord&) = default;
};

CohomologyRecord cohomology_record(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts = {});

/// Records for n in [n_lo, n_hi], m in [m_lo, m_hi], sorted by (m, n).
std::vector<CohomologyRecord> cohomology_table(const FatPointScheme& scheme, int n_lo, int n_hi, int m_lo, int m_hi,
                                               const EvalOptions& opts = {});

/// CSV with header a,b,c,u,n,m,h0,h1,h2,chi.
void write_cohomology_csv(std::ostream& out, const FatPointScheme& scheme, const std::vector<CohomologyRecord>& rows);

}  // namespace wpp
