#include "wpp/cli/report.hpp"

#include <ostream>

namespace wpp::cli {

namespace {

Json field_prime(const FieldSpec& field) {
  if (field.is_prime()) return field.prime();
  return "q";
}

}  // namespace

Json certificate_json(const NegativeCurveCertificate& cert) {
  Json j;
  j["d"] = cert.d;
  j["m0"] = cert.m0;
  j["self_int"] = to_string(cert.self_int);
  j["s_candidate"] = to_string(cert.s_candidate);
  j["witness"] = cert.witness.to_string();
  j["h0_at_class"] = cert.h0_at_class;
  return j;
}

Json s_invariant_json(const SInvariantReport& report) {
  Json j;
  j["abcu"] = report.abcu;
  // s >= sqrt(abcu), so s^2 >= abcu.
  j["s_lower_bound_sq"] = report.abcu;
  j["certificate"] = report.certificate ? certificate_json(*report.certificate) : Json(nullptr);
  Json ratios = Json::array();
  for (std::size_t i = 0; i < report.regs.size(); ++i) {
    Rational r(report.regs[i], static_cast<long>(i + 1));
    r.canonicalize();
    ratios.push_back(to_string(r));
  }
  j["reg_over_m"] = ratios;
  j["s"] = report.sigma.s.to_string();
  j["sigma_bound"] = report.sigma.bound;
  j["period"] = report.sigma.period ? Json(*report.sigma.period) : Json(nullptr);
  j["verdict"] = report.verdict;
  return j;
}

Json prop_nagata_json(const PropNagataReport& report) {
  Json j;
  const auto& p = report.plane;
  j["weights"] = Json::array({p.a(), p.b(), p.c()});
  j["r"] = report.r;
  j["n_points"] = report.n_points();
  j["seed"] = report.seed;
  j["prime"] = field_prime(report.field);
  Json points = Json::array();
  for (const auto& q : report.points) points.push_back(q.to_string());
  j["points"] = points;
  Json rows = Json::array();
  for (const auto& row : report.per_m) {
    rows.push_back(
        {{"m", row.m}, {"d_min", row.d_min}, {"sqrt_bound_sq", row.sqrt_bound_sq}, {"negative", row.negative}});
  }
  j["per_m"] = rows;
  j["certificate"] = report.certificate ? certificate_json(*report.certificate) : Json(nullptr);
  j["verdict"] = report.verdict;
  return j;
}

Json vanishing_probe_json(const VanishingProbeReport& report) {
  Json j;
  j["n_points"] = report.n_points;
  j["seed"] = report.seed;
  j["prime"] = field_prime(report.field);
  Json rows = Json::array();
  for (const auto& r : report.per_m) {
    Json redraws = Json::array();
    for (const auto& d : r.redraws) {
      redraws.push_back({{"attempt", d.attempt},
                         {"seed", d.seed},
                         {"degree", d.degree},
                         {"h0", d.h0},
                         {"expected_h0", d.expected_h0}});
    }
    rows.push_back({{"m", r.m},
                    {"bound_d", r.bound_d},
                    {"violation_d", r.violation_d ? Json(*r.violation_d) : Json(nullptr)},
                    {"h0_at_violation", r.h0_at_violation},
                    {"attempts", r.attempts},
                    {"redraws", redraws}});
  }
  j["per_m"] = rows;
  j["verdict"] = report.verdict;
  return j;
}

Json orbit_json(const WeightedPlane& plane, const OrbitScheme& orbit) {
  Json j;
  j["weights"] = Json::array({plane.a(), plane.b(), plane.c()});
  j["prime"] = orbit.prime;
  j["source"] = orbit.source.to_string();
  j["count"] = orbit.points.size();
  Json points = Json::array();
  for (const auto& q : orbit.points) points.push_back(q.to_string());
  j["points"] = points;
  return j;
}

void write_sigma_csv(std::ostream& out, const SigmaSeries& series) {
  out << "m,reg,floor_sm,sigma\n";
  for (const auto& e : series.entries) out << e.m << "," << e.reg << "," << e.floor_sm << "," << e.sigma << "\n";
}

void write_regularity_csv(std::ostream& out, const std::vector<int>& regs) {
  out << "m,reg\n";
  for (std::size_t i = 0; i < regs.size(); ++i) out << i + 1 << "," << regs[i] << "\n";
}

void write_basechange_csv(std::ostream& out, const std::vector<BasechangeRow>& rows) {
  out << "m,downstream_reg,upstream_reg,shift,holds\n";
  for (const auto& r : rows) {
    out << r.m << "," << r.downstream_reg << "," << r.upstream_reg << "," << r.shift << ","
        << (r.holds ? "true" : "false") << "\n";
  }
}

void write_json(std::ostream& out, const Json& value) { out << value.dump(2) << "\n"; }

}  // namespace wpp::cli
