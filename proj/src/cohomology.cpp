#include "wpp/cohomology.hpp"

#include <algorithm>

#include "wpp/errors.hpp"

namespace wpp {

Rational pair(const DivisorClass& d1, const DivisorClass& d2, const WeightedPlane& plane, std::int64_t u) {
  Rational a_part(BigInt(static_cast<long>(d1.n)) * static_cast<long>(d2.n), BigInt(static_cast<long>(plane.abc())));
  a_part.canonicalize();
  return a_part - Rational(BigInt(static_cast<long>(d1.m)) * static_cast<long>(d2.m) * static_cast<long>(u));
}

Rational chi_rr(const DivisorClass& d, const FatPointScheme& scheme) {
  const auto& plane = scheme.plane();
  // D.D - D.K with D.K = -n(a+b+c)/abc + m sum e_i.
  const Rational self = pair(d, d, plane, scheme.u());
  Rational dk(BigInt(static_cast<long>(-d.n)) * plane.kappa(), BigInt(static_cast<long>(plane.abc())));
  dk.canonicalize();
  dk += Rational(BigInt(static_cast<long>(d.m)) * static_cast<long>(scheme.e_sum()));
  return (self - dk) / 2 + 1;
}

std::size_t h2(const WeightedPlane& plane, std::int64_t n) { return dim_S(plane, -n - plane.kappa()); }

std::size_t h1(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts) {
  return scheme.condition_count(m) - condition_rank(scheme, n, m, opts);
}

std::int64_t h1_cap(const FatPointScheme& scheme, int m) {
  return scheme.plane().abc() * m * scheme.e_sum() - 1;
}

CohomologyRecord cohomology_record(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts) {
  if (m < 0) throw InvalidInput("m must be nonnegative");
  CohomologyRecord rec;
  rec.n = n;
  rec.m = m;
  const std::size_t rank = condition_rank(scheme, n, m, opts);
  rec.h0 = dim_S(scheme.plane(), n) - rank;
  rec.h1 = scheme.condition_count(m) - rank;
  rec.h2 = h2(scheme.plane(), n);
  rec.chi = static_cast<std::int64_t>(rec.h0) - static_cast<std::int64_t>(rec.h1) + static_cast<std::int64_t>(rec.h2);
  return rec;
}

std::vector<CohomologyRecord> cohomology_table(const FatPointScheme& scheme, int n_lo, int n_hi, int m_lo, int m_hi,
                                               const EvalOptions& opts) {
  if (n_lo > n_hi || m_lo > m_hi) return {};
  if (m_lo < 0) throw InvalidInput("m range must be nonnegative");
  const std::size_t width = static_cast<std::size_t>(n_hi - n_lo + 1);
  const std::size_t cells = width * static_cast<std::size_t>(m_hi - m_lo + 1);
  std::vector<CohomologyRecord> rows(cells);
  parallel_for(cells, opts.jobs, [&](std::size_t idx) {
    const int m = m_lo + static_cast<int>(idx / width);
    const int n = n_lo + static_cast<int>(idx % width);
    rows[idx] = cohomology_record(scheme, n, m, opts);
  });
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
    return l.m != r.m ? l.m < r.m : l.n < r.n;
  });
  return rows;
}

void write_cohomology_csv(std::ostream& out, const FatPointScheme& scheme, const std::vector<CohomologyRecord>& rows) {
  const auto& p = scheme.plane();
  out << "a,b,c,u,n,m,h0,h1,h2,chi\n";
  for (const auto& r : rows) {
    out << p.a() << ',' << p.b() << ',' << p.c() << ',' << scheme.u() << ',' << r.n << ',' << r.m << ',' << r.h0
        << ',' << r.h1 << ',' << r.h2 << ',' << r.chi << '\n';
  }
}

}  // namespace wpp
