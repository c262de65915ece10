// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wpp/cli/report.hpp"
#include "wpp/cohomology.hpp"
#include "wpp/errors.hpp"
#include "wpp/matrix.hpp"
#include "wpp/nagata.hpp"
#include "wpp/random.hpp"

using namespace wpp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(std::string detail) const {
    if (failures_ == 0) return {true, std::move(detail)};
    return {false, std::to_string(failures_) + " failure(s): " + notes_};
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

UpstreamPoint pt(long u, long v, long w) { return UpstreamPoint{{Rational(u), Rational(v), Rational(w)}}; }

std::string cell(int n, int m) { return "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"; }

// C(k, 2).
std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

std::vector<FatPointScheme> golden_schemes(const FieldSpec& field) {
  return {
      FatPointScheme(WeightedPlane(1, 1, 1), {pt(1, 2, 3)}, {1}, field),
      FatPointScheme(WeightedPlane(1, 2, 3), {pt(1, 1, 1)}, {1}, field),
      FatPointScheme(WeightedPlane(2, 3, 5), {pt(1, 1, 1)}, {1}, field),
      FatPointScheme(WeightedPlane(1, 2, 3), {pt(1, 1, 1), pt(2, 3, 5)}, {1, 2}, field),
  };
}

std::string label(const FatPointScheme& s) { return "P(" + s.plane().to_string() + ") r=" + std::to_string(s.r()); }

Outcome c1_single_point_closed_form() {
  Check check;
  const FatPointScheme s(WeightedPlane(1, 1, 1), {pt(2, 3, 5)}, {1});
  int cells = 0;
  for (int m = 0; m <= 12; ++m) {
    for (int n = std::max(0, m - 1); n <= 12; ++n) {
      const std::size_t total = choose2(static_cast<std::size_t>(n) + 2);
      const std::size_t conds = choose2(static_cast<std::size_t>(m) + 1);
      const std::size_t expected = total > conds ? total - conds : 0;
      check.expect(h0(s, n, m) == expected, "h0" + cell(n, m));
      ++cells;
    }
  }
  return check.outcome(std::to_string(cells) + " cells");
}

Outcome c2_riemann_roch() {
  Check check;
  int cells = 0;
  for (auto [a, b, c] : {std::array{1, 1, 1}, std::array{1, 2, 3}, std::array{2, 3, 5}}) {
    const FatPointScheme s(WeightedPlane(a, b, c), {pt(1, 1, 1)}, {1});
    const int abc = a * b * c;
    for (int m = 0; m <= 8; ++m) {
      for (int n = -20 * abc; n <= 20 * abc; n += abc) {
        const auto rec = cohomology_record(s, n, m);
        check.expect(Rational(rec.chi) == chi_rr({n, m}, s), label(s) + cell(n, m));
        ++cells;
      }
    }
  }
  return check.outcome(std::to_string(cells) + " Cartier classes");
}

Outcome c3_h1_cap() {
  Check check;
  int cells = 0;
  for (const auto& s : golden_schemes(FieldSpec::default_prime())) {
    for (int m = 1; m <= 10; ++m) {
      const auto cap = h1_cap(s, m);
      const int n = static_cast<int>(cap);
      check.expect(h1(s, n, m) == 0, label(s) + cell(n, m));
      check.expect(h1(s, n + static_cast<int>(s.plane().abc()), m) == 0, label(s) + " cap+abc m=" + std::to_string(m));
      cells += 2;
    }
  }
  return check.outcome(std::to_string(cells) + " cells");
}

Outcome c4_h2_vanishing() {
  Check check;
  for (auto [a, b, c] : {std::array{1, 1, 1}, std::array{1, 2, 3}, std::array{2, 3, 5}}) {
    const WeightedPlane plane(a, b, c);
    const std::int64_t kappa = plane.kappa();
    check.expect(h2(plane, -kappa) == 1, "h2(-kappa) on P(" + plane.to_string() + ")");
    for (std::int64_t n = -kappa + 1; n <= 40 * plane.abc(); ++n) {
      check.expect(h2(plane, n) == 0, "h2(" + std::to_string(n) + ") on P(" + plane.to_string() + ")");
    }
  }
  return check.outcome("three planes");
}

// Degree-n condition matrix of the point (1:1:1) on P(1,2,3) for m = 2,
// written out by hand in the chart w = 1: rows f, df/du, df/dv at u = v = 1.
std::size_t hand_rank(int n) {
  const RationalField q;
  std::vector<std::array<long, 3>> cols;  // upstream exponents (u, v, w)
  if (n == 3) cols = {{3, 0, 0}, {1, 2, 0}, {0, 0, 3}};
  if (n == 4) cols = {{4, 0, 0}, {2, 2, 0}, {0, 4, 0}, {1, 0, 3}};
  ExactMatrix<RationalField> mat(q, 3, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    mat.at(0, j) = Rational(1);
    mat.at(1, j) = Rational(cols[j][0]);
    mat.at(2, j) = Rational(cols[j][1]);
  }
  return rank(mat);
}

Outcome c5_monomial_curve() {
  Check check;
  const FatPointScheme s(WeightedPlane(1, 2, 3), {pt(1, 1, 1)}, {1});
  const auto cert = negative_curve_search(s, 4);
  check.expect(cert.has_value(), "no certificate");
  if (cert) {
    check.expect(cert->d == 2 && cert->m0 == 1, "class");
    check.expect(cert->self_int == Rational(-1, 3), "self-intersection");
    check.expect(cert->s_candidate == 3, "s_candidate");
    const WeightedForm conic{{{Monomial{0, 1, 0}, Rational(1)}, {Monomial{2, 0, 0}, Rational(-1)}}};
    check.expect(cert->witness.proportional_to(conic), "witness " + cert->witness.to_string());
  }
  check.expect(hand_rank(3) == 3 && hand_rank(4) == 3, "hand ranks");
  check.expect(condition_rank(s, 3, 2) == hand_rank(3) && condition_rank(s, 4, 2) == hand_rank(4),
               "library rank vs hand rank");
  check.expect(h1(s, 2, 2) == 1, "h1(2, 2)");
  check.expect(regularity(s, 1) == 1, "reg(1)");
  check.expect(regularity(s, 2) == 4, "reg(2)");

  const auto regs = regularity_series(s, 30);
  const auto slope = Slope::exact(cert ? cert->s_candidate : Rational(3));
  const auto full = sigma_from_regularity(slope, 6, regs);
  const auto head = sigma_from_regularity(slope, 6, std::vector<int>(regs.begin(), regs.begin() + 20));
  check.expect(full.bound == head.bound, "max|sigma| differs between m_max 20 and 30");
  const auto period = detect_period(full, 6, 10);
  check.expect(period.has_value(), "no period <= 6 on m >= 10");
  std::ostringstream detail;
  detail << "s=3, max|sigma|=" << full.bound << ", period=" << (period ? std::to_string(*period) : "none");
  return check.outcome(detail.str());
}

Outcome c6_p235() {
  Check check;
  const FatPointScheme s(WeightedPlane(2, 3, 5), {pt(1, 1, 1)}, {1});
  const auto cert = negative_curve_search(s, 4);
  check.expect(cert.has_value(), "no certificate");
  if (cert) {
    check.expect(cert->d == 5 && cert->m0 == 1, "class");
    check.expect(cert->s_candidate == 6, "s_candidate");
    const WeightedForm witness{{{Monomial{0, 0, 1}, Rational(1)}, {Monomial{1, 1, 0}, Rational(-1)}}};
    check.expect(cert->witness.proportional_to(witness), "witness " + cert->witness.to_string());
    check.expect(enumerate_monomials(s.plane(), 5).size() == 2, "two monomials of degree 5");
  }
  return check.outcome("(5,1), s=6");
}

Outcome c7_base_change() {
  Check check;
  const FatPointScheme s(WeightedPlane(1, 2, 3), {pt(1, 1, 1)}, {1});
  std::string regs;
  for (int m = 1; m <= 5; ++m) {
    const auto row = basechange_check(s, m, 7);
    check.expect(row.upstream_reg == row.downstream_reg + 3, "m=" + std::to_string(m));
    regs += (regs.empty() ? "" : ",") + std::to_string(row.upstream_reg);
  }
  return check.outcome("upstream reg " + regs);
}

Outcome c8_orbits() {
  Check check;
  for (auto [plane, p] : {std::pair{WeightedPlane(1, 2, 3), 7ULL}, std::pair{WeightedPlane(2, 3, 5), 31ULL}}) {
    const auto orbit = orbit_points(plane, pt(1, 1, 1), p);
    check.expect(orbit.points.size() == static_cast<std::size_t>(plane.abc()), "orbit size");
    // Construction validates nonzero coordinates and pairwise distinct points.
    try {
      FatPointScheme(WeightedPlane(1, 1, 1), orbit.points, {}, FieldSpec::prime_field(p));
    } catch (const InvalidInput& e) {
      check.expect(false, e.what());
    }
  }
  return check.outcome("6 and 30 distinct points");
}

Outcome c9_covering_oracle() {
  Check check;
  const FatPointScheme s(WeightedPlane(1, 2, 3), {pt(1, 1, 1)}, {1}, FieldSpec::prime_field(7));
  int cells = 0;
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 12; ++n) {
      check.expect(h0(s, n, m) == orbit_invariant_h0(s, 7, n, m), cell(n, m));
      ++cells;
    }
  }
  return check.outcome(std::to_string(cells) + " cells");
}

Outcome c10_nagata_probe() {
  Check check;
  constexpr int kSeeds = 200;
  int passed = 0;
  std::size_t redraws = 0;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    const auto rep = nagata_vanishing_probe(16, {1, 2, 3}, static_cast<std::uint64_t>(seed), FieldSpec::default_prime());
    if (!rep.violated) ++passed;
    for (const auto& r : rep.per_m) redraws += r.redraws.size();
  }
  check.expect(passed >= 0.99 * kSeeds, "pass rate " + std::to_string(passed) + "/" + std::to_string(kSeeds));
  const auto nine = nagata_vanishing_probe(9, {1}, 1, FieldSpec::default_prime());
  check.expect(nine.per_m[0].violation_d == 3, "9 points, m=1");
  return check.outcome(std::to_string(passed) + "/" + std::to_string(kSeeds) + " seeds pass, " +
                       std::to_string(redraws) + " re-draws logged");
}

std::uint64_t random_prime_60(SeededRng& rng) {
  std::uint64_t p = (1ULL << 59) + rng.below(1ULL << 59);
  p |= 1;
  while (!is_prime_u64(p)) p += 2;
  return p;
}

Outcome c11_field_agreement() {
  Check check;
  SeededRng rng(derive_seed(2024, 11));
  std::vector<FieldSpec> fields{FieldSpec::rationals()};
  std::string primes;
  for (int i = 0; i < 3; ++i) {
    const auto p = random_prime_60(rng);
    fields.push_back(FieldSpec::prime_field(p));
    primes += (primes.empty() ? "" : ",") + std::to_string(p);
  }
  const auto reference = golden_schemes(FieldSpec::rationals());
  for (std::size_t g = 0; g < reference.size(); ++g) {
    const int n_hi = static_cast<int>(h1_cap(reference[g], 3) + reference[g].plane().abc());
    std::vector<std::vector<CohomologyRecord>> tables;
    for (const auto& f : fields) tables.push_back(cohomology_table(reference[g].with_field(f), -4, n_hi, 0, 3));
    for (std::size_t i = 1; i < tables.size(); ++i) {
      check.expect(tables[i] == tables[0], label(reference[g]) + " vs " + fields[i].to_string());
    }
  }
  return check.outcome("Q vs primes " + primes);
}

std::string render_all(unsigned jobs) {
  std::ostringstream out;
  const EvalOptions opts{nullptr, jobs};
  for (const auto& s : golden_schemes(FieldSpec::default_prime())) {
    write_cohomology_csv(out, s, cohomology_table(s, -3, 40, 0, 4, opts));
  }
  const FatPointScheme s123(WeightedPlane(1, 2, 3), {pt(1, 1, 1)}, {1});
  cli::write_json(out, cli::s_invariant_json(s_invariant(s123, 8, opts)));
  cli::write_sigma_csv(out, sigma_series(s123, Slope::sqrt_abcu(), 8, opts));
  cli::write_json(out, cli::prop_nagata_json(
                           prop_nagata_report(WeightedPlane(1, 2, 3), 2, 42, 6, FieldSpec::default_prime(), opts)));
  cli::write_json(out, cli::vanishing_probe_json(
                           nagata_vanishing_probe(16, {1, 2}, 42, FieldSpec::default_prime(), opts)));
  const auto random = FatPointScheme(WeightedPlane(2, 3, 5),
                                     random_points(WeightedPlane(2, 3, 5), FieldSpec::default_prime(), 2, 42), {});
  write_cohomology_csv(out, random, cohomology_table(random, 0, 30, 0, 2, opts));
  return out.str();
}

Outcome c12_determinism() {
  Check check;
  const std::string one = render_all(1);
  check.expect(render_all(1) == one, "repeat run");
  check.expect(render_all(4) == one, "4 workers");
  check.expect(render_all(3) == one, "3 workers");
  return check.outcome(std::to_string(one.size()) + " bytes identical for 1, 3, 4 workers");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1  single fat point closed form", c1_single_point_closed_form},
      {"C2  chi equals Riemann-Roch on Cartier classes", c2_riemann_roch},
      {"C3  h1 vanishes at the cap and cap+abc", c3_h1_cap},
      {"C4  h2 vanishing above -(a+b+c)", c4_h2_vanishing},
      {"C5  P(1,2,3) golden case", c5_monomial_curve},
      {"C6  P(2,3,5) golden case", c6_p235},
      {"C7  regularity shift under the covering map", c7_base_change},
      {"C8  orbit sizes", c8_orbits},
      {"C9  covering shortcut vs full orbit", c9_covering_oracle},
      {"C10 vanishing probe at 16 and 9 points", c10_nagata_probe},
      {"C11 rational and prime-field tables agree", c11_field_agreement},
      {"C12 byte-identical output across worker counts", c12_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!result.pass) ++failed;
    std::cout << (result.pass ? "PASS " : "FAIL ") << name << " [" << result.detail << "] " << std::fixed
              << std::setprecision(2) << secs << "s" << std::endl;
  }
  std::cout << (12 - failed) << "/12 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
