// Command-line front end: wpp <command> [options]. See README.md.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wpp/cli/cache.hpp"
#include "wpp/cli/config.hpp"
#include "wpp/cli/report.hpp"
#include "wpp/cohomology.hpp"
#include "wpp/errors.hpp"
#include "wpp/nagata.hpp"
#include "wpp/random.hpp"

namespace {

using namespace wpp;
using namespace wpp::cli;

constexpr int kExitInvalid = 2;
constexpr int kExitInvariant = 3;

struct Options {
  std::string weights;
  std::vector<std::string> point;
  std::string points;
  std::string mult;
  std::string field = "fp:auto";
  std::uint64_t seed = 0;
  int m_max = 10;
  std::string n_text;
  std::string m_text;
  std::string s_text;
  int p_max = 6;
  std::optional<int> tail_start;
  std::optional<std::uint64_t> prime;
  std::string factor;
  std::size_t r = 1;
  std::string out;
  std::string cache = "off";
  unsigned jobs = 1;
  bool verbose = false;
};

std::vector<int> parse_ints(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidInput(what + ": not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (count != 0 && out.size() != count) {
    throw InvalidInput(what + " needs " + std::to_string(count) + " comma separated integers");
  }
  return out;
}

WeightedPlane plane_from(const std::string& text, const std::string& flag) {
  if (text.empty()) throw InvalidInput(flag + " is required");
  const auto w = parse_ints(text, 3, flag);
  return WeightedPlane(w[0], w[1], w[2]);
}

FieldSpec field_from(const Options& o, const WeightedPlane& plane) {
  FieldSpec field = FieldSpec::parse(o.field);
  field.require_coprime_to(static_cast<std::uint64_t>(plane.abc()));
  return field;
}

FatPointScheme scheme_from(const Options& o) {
  const WeightedPlane plane = plane_from(o.weights, "--weights");
  const FieldSpec field = field_from(o, plane);
  std::vector<UpstreamPoint> pts;
  for (const auto& p : o.point) pts.push_back(parse_point(p));
  if (!o.points.empty()) {
    if (!pts.empty()) throw InvalidInput("use either --point or --points, not both");
    if (o.points.rfind("random:", 0) == 0) {
      const auto count = parse_ints(o.points.substr(7), 1, "--points random:R")[0];
      if (count <= 0) throw InvalidInput("--points random:R needs R >= 1");
      pts = random_points(plane, field, static_cast<std::size_t>(count), derive_seed(o.seed, 0));
    } else {
      pts = read_point_file(o.points);
    }
  }
  if (pts.empty()) throw InvalidInput("no points given (--point or --points)");
  std::vector<int> mults;
  if (!o.mult.empty()) mults = parse_ints(o.mult, 0, "--mult");
  return FatPointScheme(plane, std::move(pts), std::move(mults), field);
}

std::uint64_t split_prime_for(const Options& o, const WeightedPlane& plane) {
  if (o.prime) return *o.prime;
  return smallest_split_prime(plane.abc(), static_cast<std::uint64_t>(plane.abc()) + 1);
}

// Output goes to --out or stdout; the file is only written once the
// computation has succeeded.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + o.out);
  file << text;
}

void require_m_max(const Options& o, int least) {
  if (o.m_max < least) throw InvalidInput("--m-max must be at least " + std::to_string(least));
}

std::string run_command(const std::string& cmd, const Options& o, const EvalOptions& eval) {
  std::ostringstream out;
  if (cmd == "cohomology") {
    const auto scheme = scheme_from(o);
    const auto [n_lo, n_hi] = parse_int_range(o.n_text.empty() ? "0..20" : o.n_text);
    const auto [m_lo, m_hi] = parse_int_range(o.m_text.empty() ? "0..3" : o.m_text);
    if (m_lo < 0) throw InvalidInput("--m must be nonnegative");
    write_cohomology_csv(out, scheme, cohomology_table(scheme, n_lo, n_hi, m_lo, m_hi, eval));
  } else if (cmd == "reg") {
    require_m_max(o, 1);
    write_regularity_csv(out, regularity_series(scheme_from(o), o.m_max, eval));
  } else if (cmd == "sigma") {
    require_m_max(o, 1);
    const auto scheme = scheme_from(o);
    std::optional<Slope> slope;
    if (o.s_text == "sqrt") {
      slope = Slope::sqrt_abcu();
    } else if (!o.s_text.empty()) {
      slope = Slope::exact(parse_rational(o.s_text));
    } else if (auto cert = negative_curve_search(scheme, o.m_max, eval)) {
      slope = Slope::exact(cert->s_candidate);
    } else {
      slope = Slope::sqrt_abcu();
    }
    auto series = sigma_series(scheme, *slope, o.m_max, eval);
    const int tail = o.tail_start.value_or(std::max(1, o.m_max / 2));
    series.period = detect_period(series, o.p_max, tail);
    std::cerr << "s = " << slope->to_string() << ", max |sigma| = " << series.bound << ", period = "
              << (series.period ? std::to_string(*series.period) : "none") << " (tail m >= " << tail << ")\n";
    write_sigma_csv(out, series);
  } else if (cmd == "negcurve") {
    require_m_max(o, 1);
    const auto cert = negative_curve_search(scheme_from(o), o.m_max, eval);
    Json j;
    if (cert) {
      j["found"] = true;
      j.update(certificate_json(*cert));
    } else {
      j["found"] = false;
      j["m_max"] = o.m_max;
    }
    write_json(out, j);
  } else if (cmd == "sinv") {
    require_m_max(o, 2);
    auto report = s_invariant(scheme_from(o), o.m_max, eval);
    report.sigma.period = detect_period(report.sigma, o.p_max, o.tail_start.value_or(std::max(1, o.m_max / 2)));
    write_json(out, s_invariant_json(report));
  } else if (cmd == "nagata") {
    const FieldSpec field = FieldSpec::parse(o.field);
    if (!o.factor.empty()) {
      if (!o.n_text.empty() || !o.m_text.empty()) throw InvalidInput("--factor runs take --r and --m-max, not --n or --m");
      require_m_max(o, 1);
      const WeightedPlane plane = plane_from(o.factor, "--factor");
      field.require_coprime_to(static_cast<std::uint64_t>(plane.abc()));
      if (o.r == 0) throw InvalidInput("--r must be at least 1");
      write_json(out, prop_nagata_json(prop_nagata_report(plane, o.r, o.seed, o.m_max, field, eval)));
    } else {
      if (o.n_text.empty() || o.m_text.empty()) throw InvalidInput("nagata needs --n N --m LIST, or --factor a,b,c");
      const int n = parse_ints(o.n_text, 1, "--n")[0];
      if (n < 1) throw InvalidInput("--n must be at least 1");
      const auto ms = parse_int_list(o.m_text);
      write_json(out, vanishing_probe_json(
                          nagata_vanishing_probe(static_cast<std::size_t>(n), ms, o.seed, field, eval)));
    }
  } else if (cmd == "split-demo") {
    const WeightedPlane plane = plane_from(o.weights, "--weights");
    if (o.point.size() != 1) throw InvalidInput("split-demo takes exactly one --point");
    const std::uint64_t p = split_prime_for(o, plane);
    write_json(out, orbit_json(plane, orbit_points(plane, parse_point(o.point[0]), p)));
  } else if (cmd == "basechange-check") {
    require_m_max(o, 1);
    auto scheme = scheme_from(o);
    const std::uint64_t p = split_prime_for(o, scheme.plane());
    std::vector<BasechangeRow> rows;
    for (int m = 1; m <= o.m_max; ++m) rows.push_back(basechange_check(scheme, m, p, eval));
    write_basechange_csv(out, rows);
  }
  return out.str();
}

void add_options(CLI::App* sub, Options& o) {
  sub->add_option("--weights", o.weights, "weights a,b,c");
  sub->add_option("--point", o.point, "point u,v,w (repeatable)");
  sub->add_option("--points", o.points, "random:R or a point file");
  sub->add_option("--mult", o.mult, "multiplicities e1,e2,...");
  sub->add_option("--field", o.field, "q, fp:auto or fp:P")->capture_default_str();
  sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  sub->add_option("--m-max", o.m_max, "largest m")->capture_default_str();
  sub->add_option("--n", o.n_text, "degree range lo..hi (cohomology) or point count (nagata)");
  sub->add_option("--m", o.m_text, "m range lo..hi (cohomology) or list (nagata)");
  sub->add_option("--s", o.s_text, "slope: rational or sqrt");
  sub->add_option("--p-max", o.p_max, "largest period tried")->capture_default_str();
  sub->add_option("--tail-start", o.tail_start, "first m of the period window");
  sub->add_option("--prime", o.prime, "split prime (default: smallest p = 1 mod abc)");
  sub->add_option("--factor", o.factor, "weights a,b,c for the covering report");
  sub->add_option("--r", o.r, "points downstairs")->capture_default_str();
  sub->add_option("--out", o.out, "output file (default stdout)");
  sub->add_option("--cache", o.cache, "rank cache file or off")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  sub->add_option("--config", "key=value file; flags override it");
  sub->add_flag("--verbose", o.verbose, "log cache statistics");
}

std::optional<std::string> config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Cohomology and regularity of fat points on weighted projective planes", "wpp");
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"cohomology", "h0, h1, h2, chi table as CSV"},
      {"reg", "regularity of symbolic powers as CSV"},
      {"sigma", "sigma(m) = reg(m) - floor(s m) as CSV"},
      {"negcurve", "negative curve certificate as JSON"},
      {"sinv", "s-invariant report as JSON"},
      {"nagata", "vanishing probe (--n, --m) or covering report (--factor) as JSON"},
      {"split-demo", "orbit of one point under the covering map as JSON"},
      {"basechange-check", "regularity shift under the covering map as CSV"},
  };
  for (const auto& [name, help] : commands) add_options(app.add_subcommand(name, help), o);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (auto path = config_path(args)) args = merge_config(args, read_config_file(*path), {"verbose"});
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    std::unique_ptr<FileRankStore> store;
    if (o.cache != "off") store = std::make_unique<FileRankStore>(o.cache);
    const EvalOptions eval{store.get(), o.jobs};
    const std::string text = run_command(cmd, o, eval);
    if (o.verbose && store) {
      std::cerr << "cache: " << store->hits() << " hits, " << store->misses() << " misses\n";
    }
    emit(o, text);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
