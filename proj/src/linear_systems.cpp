#include "wpp/linear_systems.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "wpp/errors.hpp"
#include "wpp/random.hpp"

namespace wpp {

namespace {

template <class Field>
std::array<typename Field::Element, 3> to_field(const Field& f, const UpstreamPoint& p) {
  return {f.from_rational(p.coords[0]), f.from_rational(p.coords[1]), f.from_rational(p.coords[2])};
}

template <class Field>
bool images_equal(const Field& f, const std::array<typename Field::Element, 3>& p,
                  const std::array<typename Field::Element, 3>& q, const WeightedPlane& plane) {
  const std::array<std::uint64_t, 3> w = {static_cast<std::uint64_t>(plane.a()),
                                          static_cast<std::uint64_t>(plane.b()),
                                          static_cast<std::uint64_t>(plane.c())};
  // Image coordinates X = u^a, Y = v^b, Z = w^c.
  std::array<typename Field::Element, 3> x, y;
  for (int i = 0; i < 3; ++i) {
    x[i] = f.pow(p[i], w[i]);
    y[i] = f.pow(q[i], w[i]);
  }
  // (y_i / x_i)^{w_j} = (y_j / x_j)^{w_i} for every pair i < j.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      auto lhs = f.mul(f.pow(y[i], w[j]), f.pow(x[j], w[i]));
      auto rhs = f.mul(f.pow(y[j], w[i]), f.pow(x[i], w[j]));
      if (!f.is_zero(f.sub(lhs, rhs))) return false;
    }
  }
  return true;
}

// Chart index: first nonzero among (w, v, u); the other two are the local
// coordinates, in increasing index order.
template <class Field>
std::array<int, 3> choose_chart(const Field& f, const std::array<typename Field::Element, 3>& p) {
  for (int chart : {2, 1, 0}) {
    if (!f.is_zero(p[chart])) {
      std::array<int, 3> order{};
      int slot = 0;
      for (int i = 0; i < 3; ++i) {
        if (i != chart) order[slot++] = i;
      }
      order[2] = chart;
      return order;
    }
  }
  throw InvalidInput("point with all coordinates zero");
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

std::uint64_t fnv1a(const std::string& text, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string UpstreamPoint::to_string() const {
  return wpp::to_string(coords[0]) + "," + wpp::to_string(coords[1]) + "," + wpp::to_string(coords[2]);
}

UpstreamPoint parse_point(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<std::string> parts;
  std::string token;
  while (in >> token) parts.push_back(token);
  if (parts.size() != 3) throw InvalidInput("point '" + text + "' must have exactly three coordinates");
  return UpstreamPoint{{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])}};
}

std::vector<UpstreamPoint> read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open point file '" + path + "'");
  std::vector<UpstreamPoint> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      points.push_back(parse_point(line));
    } catch (const InvalidInput& e) {
      throw InvalidInput(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return points;
}

bool downstream_equal(const UpstreamPoint& p, const UpstreamPoint& q, const WeightedPlane& plane,
                      const FieldSpec& field) {
  return with_field(field, [&](const auto& f) {
    auto pf = to_field(f, p);
    auto qf = to_field(f, q);
    for (int i = 0; i < 3; ++i) {
      if (f.is_zero(pf[i]) || f.is_zero(qf[i])) {
        throw InvalidInput("point coordinates must be nonzero, got " + p.to_string() + " / " + q.to_string());
      }
    }
    return images_equal(f, pf, qf, plane);
  });
}

FatPointScheme::FatPointScheme(WeightedPlane plane, std::vector<UpstreamPoint> points, std::vector<int> multiplicities,
                               FieldSpec field)
    : plane_(plane), points_(std::move(points)), multiplicities_(std::move(multiplicities)), field_(field) {
  if (points_.empty()) throw InvalidInput("a fat point scheme needs at least one point");
  if (multiplicities_.empty()) multiplicities_.assign(points_.size(), 1);
  if (multiplicities_.size() != points_.size()) {
    throw InvalidInput("got " + std::to_string(multiplicities_.size()) + " multiplicities for " +
                       std::to_string(points_.size()) + " points");
  }
  for (int e : multiplicities_) {
    if (e <= 0) throw InvalidInput("multiplicities must be positive");
    u_ += static_cast<std::int64_t>(e) * e;
    e_sum_ += e;
  }
  field_.require_coprime_to(static_cast<std::uint64_t>(plane_.abc()));

  std::ostringstream id;
  id << "w=" << plane_.to_string() << ";f=" << field_.to_string() << ";p=";
  wpp::with_field(field_, [&](const auto& f) {
    std::vector<std::array<typename std::decay_t<decltype(f)>::Element, 3>> coords;
    for (const auto& p : points_) {
      auto pf = to_field(f, p);
      for (int i = 0; i < 3; ++i) {
        if (f.is_zero(pf[i])) {
          throw InvalidInput("point " + p.to_string() + " lies on the coordinate triangle (xyz vanishes there)");
        }
      }
      for (const auto& prev : coords) {
        if (images_equal(f, prev, pf, plane_)) {
          throw InvalidInput("point " + p.to_string() + " has the same image in P(" + plane_.to_string() +
                             ") as an earlier point");
        }
      }
      const auto inv_w = f.inv(pf[2]);
      id << f.format(f.mul(pf[0], inv_w)) << ":" << f.format(f.mul(pf[1], inv_w)) << "|";
      coords.push_back(pf);
    }
  });
  id << ";e=";
  for (int e : multiplicities_) id << e << ",";
  identity_ = id.str();
}

std::size_t FatPointScheme::condition_count(int m) const {
  std::size_t total = 0;
  for (int e : multiplicities_) {
    const std::size_t mu = static_cast<std::size_t>(m) * static_cast<std::size_t>(e);
    total += mu * (mu + 1) / 2;
  }
  return total;
}

std::string FatPointScheme::cache_key(int n, int m) const {
  const std::string text = identity_ + ";n=" + std::to_string(n) + ";m=" + std::to_string(m);
  return hex64(fnv1a(text, 0xcbf29ce484222325ULL)) + hex64(fnv1a(text, 0x84222325cbf29ce4ULL));
}

FatPointScheme FatPointScheme::with_field(FieldSpec field) const {
  return FatPointScheme(plane_, points_, multiplicities_, field);
}

std::vector<UpstreamExponents> covering_exponents(const WeightedPlane& plane, std::span<const Monomial> monomials) {
  std::vector<UpstreamExponents> out;
  out.reserve(monomials.size());
  for (const auto& mono : monomials) {
    out.push_back({plane.a() * mono.i, plane.b() * mono.j, plane.c() * mono.k});
  }
  return out;
}

template <class Field>
ExactMatrix<Field> hasse_conditions(const Field& f, std::span<const UpstreamExponents> columns,
                                    std::span<const UpstreamPoint> points, std::span<const int> orders) {
  using Element = typename Field::Element;
  std::size_t rows = 0;
  int max_order = 0;
  for (int mu : orders) {
    rows += static_cast<std::size_t>(mu) * (mu + 1) / 2;
    max_order = std::max(max_order, mu);
  }
  ExactMatrix<Field> out(f, rows, columns.size());
  if (rows == 0 || columns.empty()) return out;

  int max_exp = 0;
  for (const auto& e : columns) max_exp = std::max({max_exp, e[0], e[1], e[2]});

  // binom[e][s] = C(e, s) for s < max_order.
  std::vector<std::vector<Element>> binom(max_exp + 1, std::vector<Element>(max_order, f.zero()));
  for (int e = 0; e <= max_exp; ++e) {
    binom[e][0] = f.one();
    for (int s = 1; s < max_order && s <= e; ++s) {
      binom[e][s] = f.add(binom[e - 1][s - 1], s <= e - 1 ? binom[e - 1][s] : f.zero());
    }
  }

  std::size_t row0 = 0;
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const int mu = orders[pi];
    if (mu == 0) continue;
    const auto raw = to_field(f, points[pi]);
    const auto chart = choose_chart(f, raw);
    const auto inv = f.inv(raw[chart[2]]);
    const Element x1 = f.mul(raw[chart[0]], inv);
    const Element x2 = f.mul(raw[chart[1]], inv);
    std::vector<Element> pow1(max_exp + 1), pow2(max_exp + 1);
    pow1[0] = f.one();
    pow2[0] = f.one();
    for (int e = 1; e <= max_exp; ++e) {
      pow1[e] = f.mul(pow1[e - 1], x1);
      pow2[e] = f.mul(pow2[e - 1], x2);
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const int e1 = columns[c][chart[0]];
      const int e2 = columns[c][chart[1]];
      std::size_t r = row0;
      for (int total = 0; total < mu; ++total) {
        for (int s = total; s >= 0; --s, ++r) {
          const int t = total - s;
          if (s > e1 || t > e2) continue;
          out.at(r, c) = f.mul(f.mul(binom[e1][s], pow1[e1 - s]), f.mul(binom[e2][t], pow2[e2 - t]));
        }
      }
    }
    row0 += static_cast<std::size_t>(mu) * (mu + 1) / 2;
  }
  return out;
}

template <class Field>
ExactMatrix<Field> condition_matrix(const Field& f, const FatPointScheme& scheme, int n, int m) {
  const auto monomials = enumerate_monomials(scheme.plane(), n);
  const auto columns = covering_exponents(scheme.plane(), monomials);
  std::vector<int> orders;
  for (int e : scheme.multiplicities()) orders.push_back(m * e);
  return hasse_conditions(f, std::span<const UpstreamExponents>(columns), std::span(scheme.points()),
                          std::span<const int>(orders));
}

template ExactMatrix<PrimeField> hasse_conditions(const PrimeField&, std::span<const UpstreamExponents>,
                                                  std::span<const UpstreamPoint>, std::span<const int>);
template ExactMatrix<RationalField> hasse_conditions(const RationalField&, std::span<const UpstreamExponents>,
                                                     std::span<const UpstreamPoint>, std::span<const int>);
template ExactMatrix<PrimeField> condition_matrix(const PrimeField&, const FatPointScheme&, int, int);
template ExactMatrix<RationalField> condition_matrix(const RationalField&, const FatPointScheme&, int, int);

std::size_t condition_rank(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts) {
  if (n < 0 || m <= 0) return 0;
  std::string key;
  if (opts.store != nullptr) {
    key = scheme.cache_key(n, m);
    if (auto hit = opts.store->find_rank(key)) return *hit;
  }
  const std::size_t result =
      with_field(scheme.field(), [&](const auto& f) { return rank(condition_matrix(f, scheme, n, m)); });
  if (opts.store != nullptr) opts.store->record(key, dim_S(scheme.plane(), n) - result, result);
  return result;
}

std::size_t h0(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts) {
  if (n < 0) return 0;
  return dim_S(scheme.plane(), n) - condition_rank(scheme, n, m, opts);
}

int d_min(const FatPointScheme& scheme, int m, const EvalOptions& opts, int start) {
  if (m < 1) throw InvalidInput("d_min needs m >= 1");
  const std::size_t conditions = scheme.condition_count(m);
  for (int n = std::max(start, 0);; ++n) {
    if (h0(scheme, n, m, opts) > 0) return n;
    if (dim_S(scheme.plane(), n) > conditions) {
      throw InvariantViolation("h0 vanished although dim_S exceeds the number of conditions");
    }
  }
}

std::string WeightedForm::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms) {
    const bool negative = sgn(coeff) < 0;
    Rational magnitude = abs(coeff);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono_text = format_monomial(mono);
    if (magnitude == 1) {
      out += mono_text;
    } else {
      out += wpp::to_string(magnitude);
      if (mono_text != "1") out += "*" + mono_text;
    }
  }
  return out;
}

bool WeightedForm::proportional_to(const WeightedForm& other) const {
  if (terms.empty() || terms.size() != other.terms.size()) return false;
  auto mine = terms;
  auto theirs = other.terms;
  const auto by_monomial = [](const auto& x, const auto& y) { return monomial_order_less(x.first, y.first); };
  std::sort(mine.begin(), mine.end(), by_monomial);
  std::sort(theirs.begin(), theirs.end(), by_monomial);
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (!(mine[i].first == theirs[i].first)) return false;
    if (sgn(mine[i].second) == 0) return false;
    const Rational r = theirs[i].second / mine[i].second;
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return sgn(*ratio) != 0;
}

std::vector<WeightedForm> basis_forms(const FatPointScheme& scheme, int n, int m) {
  const auto monomials = enumerate_monomials(scheme.plane(), n);
  std::vector<WeightedForm> forms;
  if (monomials.empty()) return forms;
  with_field(scheme.field(), [&](const auto& f) {
    const auto matrix = condition_matrix(f, scheme, n, m);
    for (const auto& v : kernel_basis(matrix)) {
      WeightedForm form;
      for (std::size_t c = 0; c < monomials.size(); ++c) {
        if (!f.is_zero(v[c])) form.terms.emplace_back(monomials[c], f.to_rational(v[c]));
      }
      forms.push_back(std::move(form));
    }
  });
  return forms;
}

std::vector<UpstreamPoint> random_points(const WeightedPlane& plane, const FieldSpec& field, std::size_t count,
                                         std::uint64_t seed) {
  field.require_coprime_to(static_cast<std::uint64_t>(plane.abc()));
  SeededRng rng(seed);
  auto draw = [&]() -> Rational {
    if (field.is_prime()) {
      const std::uint64_t v = 1 + rng.below(field.prime() - 1);
      BigInt big;
      mpz_import(big.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
      return Rational(big);
    }
    std::int64_t v = 0;
    while (v == 0) v = rng.between(-(1 << 15), 1 << 15);
    return Rational(static_cast<long>(v));
  };
  std::vector<UpstreamPoint> points;
  std::size_t attempts = 0;
  while (points.size() < count) {
    if (++attempts > 1000 * (count + 1)) {
      throw InvalidInput("field too small to draw " + std::to_string(count) + " distinct points");
    }
    UpstreamPoint p{{draw(), draw(), draw()}};
    bool fresh = true;
    for (const auto& q : points) {
      if (downstream_equal(p, q, plane, field)) {
        fresh = false;
        break;
      }
    }
    if (fresh) points.push_back(std::move(p));
  }
  return points;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wpp
