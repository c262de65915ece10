#pragma once

#include <array>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wpp/matrix.hpp"
#include "wpp/scalar.hpp"
#include "wpp/weighted_plane.hpp"

namespace wpp {

/// A point (u : v : w) of the ordinary plane. Its image under the covering
/// x = u^a, y = v^b, z = w^c is the point of P(a,b,c) it stands for.
struct UpstreamPoint {
  std::array<Rational, 3> coords;

  /// "u,v,w" with each coordinate as "num" or "num/den".
  std::string to_string() const;
};

/// Parses "u,v,w" (commas and/or whitespace).
UpstreamPoint parse_point(const std::string& text);

/// Reads a point-list file: one point per line, '#' starts a comment line.
/// Throws InvalidInput if the file cannot be opened or a line is malformed.
std::vector<UpstreamPoint> read_point_file(const std::string& path);

/// Whether the images of p and q in P(a,b,c) coincide (over the algebraic
/// closure of the field). Coordinates must be nonzero in the field.
bool downstream_equal(const UpstreamPoint& p, const UpstreamPoint& q, const WeightedPlane& plane,
                      const FieldSpec& field);

/// Optional memo for condition ranks, keyed by FatPointScheme::cache_key().
class RankStore {
 public:
  virtual ~RankStore() = default;
  virtual std::optional<std::size_t> find_rank(const std::string& key) = 0;
  virtual void record(const std::string& key, std::size_t h0, std::size_t rank) = 0;
};

struct EvalOptions {
  RankStore* store = nullptr;
  /// Worker threads for independent cells; 0 or 1 means sequential.
  unsigned jobs = 1;
};

/// Distinct points of P(a,b,c) off the coordinate triangle, each with a
/// multiplicity e_i, over a fixed working field.
class FatPointScheme {
 public:
  FatPointScheme(WeightedPlane plane, std::vector<UpstreamPoint> points, std::vector<int> multiplicities,
                 FieldSpec field = FieldSpec::default_prime());

  const WeightedPlane& plane() const { return plane_; }
  const std::vector<UpstreamPoint>& points() const { return points_; }
  const std::vector<int>& multiplicities() const { return multiplicities_; }
  const FieldSpec& field() const { return field_; }

  std::size_t r() const { return points_.size(); }
  /// Sum of e_i^2.
  std::int64_t u() const { return u_; }
  /// Sum of e_i.
  std::int64_t e_sum() const { return e_sum_; }

  /// L(m) = sum mu_i (mu_i + 1) / 2 with mu_i = m e_i.
  std::size_t condition_count(int m) const;

  /// Canonical text of (weights, field, normalized points, multiplicities).
  const std::string& identity() const { return identity_; }
  /// Content hash of identity() plus (n, m), hex encoded.
  std::string cache_key(int n, int m) const;

  /// The same scheme over another working field.
  FatPointScheme with_field(FieldSpec field) const;

 private:
  WeightedPlane plane_;
  std::vector<UpstreamPoint> points_;
  std::vector<int> multiplicities_;
  FieldSpec field_;
  std::int64_t u_ = 0;
  std::int64_t e_sum_ = 0;
  std::string identity_;
};

/// Upstream exponent triple (p, q, r) of the ordinary monomial u^p v^q w^r.
using UpstreamExponents = std::array<int, 3>;

/// Upstream exponents (a i, b j, c k) of each weighted monomial.
std::vector<UpstreamExponents> covering_exponents(const WeightedPlane& plane, std::span<const Monomial> monomials);

/// Hasse-derivative vanishing conditions: for point P with order mu, one
/// row per (s, t) with s + t < mu (by total order, s descending), holding
/// D^(s,t) of each column monomial dehomogenized at the first nonzero of
/// (w, v, u) and evaluated at P.
template <class Field>
ExactMatrix<Field> hasse_conditions(const Field& field, std::span<const UpstreamExponents> columns,
                                    std::span<const UpstreamPoint> points, std::span<const int> orders);

/// Condition matrix of the scheme at (n, m): L(m) rows, dim_S(n) columns.
template <class Field>
ExactMatrix<Field> condition_matrix(const Field& field, const FatPointScheme& scheme, int n, int m);

/// Rank of the condition matrix at (n, m); 0 when n < 0 or m == 0.
std::size_t condition_rank(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts = {});

/// Dimension of the degree-n piece of the m-th symbolic power.
std::size_t h0(const FatPointScheme& scheme, int n, int m, const EvalOptions& opts = {});

/// Least n >= start with h0(n, m) > 0. start must not exceed the true value.
int d_min(const FatPointScheme& scheme, int m, const EvalOptions& opts = {}, int start = 0);

/// A weighted polynomial with exact coefficients (prime-field values are
/// given by their symmetric representative).
struct WeightedForm {
  std::vector<std::pair<Monomial, Rational>> terms;

  std::string to_string() const;
  /// True when other = lambda * this for a nonzero lambda.
  bool proportional_to(const WeightedForm& other) const;
};

/// Basis of the degree-n piece of the m-th symbolic power; size h0(n, m).
std::vector<WeightedForm> basis_forms(const FatPointScheme& scheme, int n, int m);

/// `count` random points with all coordinates nonzero and pairwise distinct
/// images in P(a,b,c). Prime field: coordinates uniform over F_p^*.
/// Rationals: coordinates uniform over the nonzero integers in [-2^15, 2^15].
std::vector<UpstreamPoint> random_points(const WeightedPlane& plane, const FieldSpec& field, std::size_t count,
                                         std::uint64_t seed);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results must be
/// written to per-index slots; ordering is left to the caller.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace wpp
