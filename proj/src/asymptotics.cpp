#include "wpp/asymptotics.hpp"

#include <algorithm>
#include <map>

#include "wpp/cohomology.hpp"
#include "wpp/errors.hpp"

namespace wpp {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw InvariantViolation("integer overflow: " + v.get_str());
  return v.get_si();
}

}  // namespace

int a2(const FatPointScheme& scheme, int m, const EvalOptions& opts, std::optional<int> hint) {
  if (m < 1) throw InvalidInput("a2 needs m >= 1");
  const int run = scheme.plane().min_weight();
  const int cap = static_cast<int>(h1_cap(scheme, m));
  std::map<int, std::size_t> memo;
  auto h1_at = [&](int n) {
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, h1(scheme, n, m, opts)).first;
    return it->second;
  };
  // h1(n + w) <= h1(n) for each weight w, so `run` consecutive zeros
  // starting at n force h1 = 0 for all degrees >= n.
  auto zero_run = [&](int n) {
    for (int k = n + run - 1; k >= n; --k) {
      if (h1_at(k) != 0) return false;
    }
    return true;
  };
  if (!zero_run(cap)) {
    throw InvariantViolation("h1 does not vanish at the cap N(" + std::to_string(m) + ") = " + std::to_string(cap));
  }
  // Invariant: zero_run(lo) fails, zero_run(hi) holds; a2 = (least such hi) - 1.
  int lo = -1;  // h1(-1) = L(m) > 0
  int hi = cap;
  if (hint && *hint + 1 > lo && *hint + 1 < hi) {
    const int guess = *hint + 1;
    if (zero_run(guess)) {
      hi = guess;
      for (int step = 1; hi - step > lo; step *= 2) {
        if (!zero_run(hi - step)) {
          lo = hi - step;
          break;
        }
        hi -= step;
      }
    } else {
      lo = guess;
      for (int step = 1; lo + step < hi; step *= 2) {
        if (zero_run(lo + step)) {
          hi = lo + step;
          break;
        }
        lo += step;
      }
    }
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (zero_run(mid) ? hi : lo) = mid;
  }
  if (h1_at(hi - 1) == 0) throw InvariantViolation("a2 search ended on a vanishing h1");
  return hi - 1;
}

int a2_linear_scan(const FatPointScheme& scheme, int m, const EvalOptions& opts) {
  if (m < 1) throw InvalidInput("a2 needs m >= 1");
  const int cap = static_cast<int>(h1_cap(scheme, m));
  if (h1(scheme, cap, m, opts) != 0) {
    throw InvariantViolation("h1 does not vanish at the cap N(" + std::to_string(m) + ") = " + std::to_string(cap));
  }
  for (int n = cap - 1;; --n) {
    if (h1(scheme, n, m, opts) != 0) return n;
  }
}

int regularity(const FatPointScheme& scheme, int m, const EvalOptions& opts, std::optional<int> hint) {
  return a2(scheme, m, opts, hint ? std::optional<int>(*hint - 2) : std::nullopt) + 2;
}

std::vector<int> regularity_series(const FatPointScheme& scheme, int m_max, const EvalOptions& opts) {
  std::vector<int> regs(static_cast<std::size_t>(std::max(m_max, 0)));
  if (opts.jobs > 1) {
    parallel_for(regs.size(), opts.jobs, [&](std::size_t i) {
      regs[i] = regularity(scheme, static_cast<int>(i) + 1, opts);
    });
    return regs;
  }
  // Sequentially, extrapolate the last step as a search hint. The hint only
  // affects which degrees get probed, never the result.
  for (std::size_t i = 0; i < regs.size(); ++i) {
    std::optional<int> hint;
    if (i >= 2) hint = 2 * regs[i - 1] - regs[i - 2];
    regs[i] = regularity(scheme, static_cast<int>(i) + 1, opts, hint);
  }
  return regs;
}

std::vector<int> d_min_series(const FatPointScheme& scheme, int m_max, const EvalOptions& opts) {
  std::vector<int> out;
  int start = 0;
  // h0 is nonincreasing in m, so d_min is nondecreasing.
  for (int m = 1; m <= m_max; ++m) {
    start = d_min(scheme, m, opts, start);
    out.push_back(start);
  }
  return out;
}

bool is_negative_class(const FatPointScheme& scheme, std::int64_t d, std::int64_t m) {
  const BigInt lhs = BigInt(static_cast<long>(d)) * static_cast<long>(d);
  const BigInt rhs = BigInt(static_cast<long>(scheme.plane().abc())) * static_cast<long>(scheme.u()) *
                     static_cast<long>(m) * static_cast<long>(m);
  return lhs < rhs;
}

std::optional<NegativeCurveCertificate> negative_curve_search(const FatPointScheme& scheme, int m_max,
                                                              const EvalOptions& opts) {
  if (m_max < 1) throw InvalidInput("negative curve search needs m_max >= 1");
  int start = 0;
  for (int m = 1; m <= m_max; ++m) {
    const int d = d_min(scheme, m, opts, start);
    start = d;
    if (!is_negative_class(scheme, d, m)) continue;
    NegativeCurveCertificate cert;
    cert.d = d;
    cert.m0 = m;
    cert.self_int = pair({d, m}, {d, m}, scheme.plane(), scheme.u());
    cert.s_candidate = Rational(BigInt(static_cast<long>(scheme.plane().abc())) * static_cast<long>(scheme.u()) * m,
                                BigInt(d));
    cert.s_candidate.canonicalize();
    const auto forms = basis_forms(scheme, d, m);
    if (forms.empty()) throw InvariantViolation("no basis form at an effective class");
    cert.witness = forms.front();
    cert.h0_at_class = forms.size();
    return cert;
  }
  return std::nullopt;
}

BigInt Slope::floor_times(std::int64_t m, std::int64_t abcu) const {
  BigInt out;
  if (is_sqrt()) {
    const BigInt radicand = BigInt(static_cast<long>(abcu)) * static_cast<long>(m) * static_cast<long>(m);
    mpz_sqrt(out.get_mpz_t(), radicand.get_mpz_t());
  } else {
    const BigInt num = value_->get_num() * static_cast<long>(m);
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), value_->get_den_mpz_t());
  }
  return out;
}

std::string Slope::to_string() const { return is_sqrt() ? "sqrt(abcu)" : wpp::to_string(*value_); }

SigmaSeries sigma_from_regularity(const Slope& s, std::int64_t abcu, const std::vector<int>& regs) {
  SigmaSeries series;
  series.s = s;
  series.abcu = abcu;
  for (std::size_t i = 0; i < regs.size(); ++i) {
    SigmaEntry e;
    e.m = static_cast<int>(i) + 1;
    e.reg = regs[i];
    e.floor_sm = to_int64(s.floor_times(e.m, abcu));
    e.sigma = e.reg - e.floor_sm;
    series.bound = std::max(series.bound, e.sigma < 0 ? -e.sigma : e.sigma);
    series.entries.push_back(e);
  }
  return series;
}

SigmaSeries sigma_series(const FatPointScheme& scheme, const Slope& s, int m_max, const EvalOptions& opts) {
  return sigma_from_regularity(s, scheme.plane().abc() * scheme.u(), regularity_series(scheme, m_max, opts));
}

std::optional<int> detect_period(const SigmaSeries& series, int p_max, int tail_start) {
  const int m_max = series.entries.empty() ? 0 : series.entries.back().m;
  auto sigma = [&](int m) { return series.entries[static_cast<std::size_t>(m - 1)].sigma; };
  const int first = std::max(tail_start, 1);
  for (int period = 1; period <= p_max && first + period <= m_max; ++period) {
    bool ok = true;
    for (int m = first; m + period <= m_max && ok; ++m) ok = sigma(m) == sigma(m + period);
    if (ok) return period;
  }
  return std::nullopt;
}

Rational tau_upper_bound(const FatPointScheme& scheme, int m_max, const EvalOptions& opts) {
  if (m_max < 1) throw InvalidInput("tau bound needs m_max >= 1");
  const auto ds = d_min_series(scheme, m_max, opts);
  Rational best;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Rational ratio(ds[i], static_cast<long>(i + 1));
    ratio.canonicalize();
    if (i == 0 || ratio < best) best = ratio;
  }
  return best;
}

SInvariantReport s_invariant(const FatPointScheme& scheme, int m_max, const EvalOptions& opts) {
  if (m_max < 2) throw InvalidInput("s-invariant report needs m_max >= 2");
  SInvariantReport report;
  report.abcu = scheme.plane().abc() * scheme.u();
  report.certificate = negative_curve_search(scheme, m_max, opts);
  report.regs = regularity_series(scheme, m_max, opts);
  const Slope slope = report.certificate ? Slope::exact(report.certificate->s_candidate) : Slope::sqrt_abcu();
  report.sigma = sigma_from_regularity(slope, report.abcu, report.regs);
  std::int64_t head = 0, tail = 0;
  for (const auto& e : report.sigma.entries) {
    const std::int64_t mag = e.sigma < 0 ? -e.sigma : e.sigma;
    auto& slot = 2 * e.m <= m_max ? head : tail;
    slot = std::max(slot, mag);
  }
  report.consistent = tail <= head;
  report.verdict = report.consistent ? "consistent" : "inconsistent";
  return report;
}

}  // namespace wpp
