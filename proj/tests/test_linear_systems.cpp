#include <cstdio>
#include <fstream>
#include <tuple>

#include "doctest.h"
#include "wpp/errors.hpp"
#include "wpp/linear_systems.hpp"

using namespace wpp;

namespace {

UpstreamPoint pt(long u, long v, long w) { return UpstreamPoint{{Rational(u), Rational(v), Rational(w)}}; }

FatPointScheme single(int a, int b, int c, FieldSpec field = FieldSpec::default_prime()) {
  return FatPointScheme(WeightedPlane(a, b, c), {pt(1, 1, 1)}, {1}, field);
}

WeightedForm form(std::vector<std::pair<Monomial, long>> terms) {
  WeightedForm out;
  for (auto& [mono, coeff] : terms) out.terms.emplace_back(mono, Rational(coeff));
  return out;
}

std::vector<long> ints(const ExactMatrix<RationalField>& m, std::size_t r) {
  std::vector<long> out;
  for (const auto& x : m.row(r)) out.push_back(x.get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("downstream_equal examples") {
  const WeightedPlane p123(1, 2, 3);
  const auto q = FieldSpec::rationals();
  CHECK(downstream_equal(pt(1, 1, 1), pt(1, 1, 1), p123, q));
  CHECK(downstream_equal(pt(1, 1, 1), pt(2, 2, 2), WeightedPlane(1, 1, 1), q));
  CHECK_FALSE(downstream_equal(pt(1, 1, 1), pt(-1, 1, 1), p123, q));
  // Both two-relation tests pass here, yet the images differ.
  CHECK_FALSE(downstream_equal(pt(1, 1, 1), pt(1, 1, -1), p123, q));
  // (1:-1:1) maps to (1:1:1) in P(1,2,3): v^2 forgets the sign.
  CHECK(downstream_equal(pt(1, 1, 1), pt(1, -1, 1), p123, q));
  // lambda = 2 on P(1,2,3): (2 : 4 : 8) = (1 : 1 : 1); upstream (2 : 2 : 2).
  CHECK(downstream_equal(pt(1, 1, 1), pt(2, 2, 2), p123, q));
  CHECK_THROWS_AS(downstream_equal(pt(0, 1, 1), pt(1, 1, 1), p123, q), InvalidInput);
}

TEST_CASE("scheme validation") {
  const WeightedPlane p123(1, 2, 3);
  CHECK_THROWS_AS(FatPointScheme(p123, {pt(1, 0, 1)}, {1}), InvalidInput);
  CHECK_THROWS_AS(FatPointScheme(p123, {pt(1, 1, 1), pt(1, -1, 1)}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(FatPointScheme(p123, {pt(1, 1, 1)}, {1}, FieldSpec::prime_field(3)), InvalidInput);
  CHECK_THROWS_AS(FatPointScheme(p123, {pt(1, 1, 1)}, {0}), InvalidInput);
  CHECK_THROWS_AS(FatPointScheme(p123, {pt(1, 1, 1)}, {1, 2}), InvalidInput);
  CHECK_THROWS_AS(FatPointScheme(p123, {}, {}), InvalidInput);
  // 7 vanishes in F_7.
  CHECK_THROWS_AS(FatPointScheme(p123, {pt(7, 1, 1)}, {1}, FieldSpec::prime_field(7)), InvalidInput);
  const FatPointScheme two(p123, {pt(1, 1, 1), pt(1, 2, 3)}, {1, 2});
  CHECK(two.u() == 5);
  CHECK(two.e_sum() == 3);
  CHECK(two.condition_count(2) == 3 + 10);
}

TEST_CASE("condition_matrix examples") {
  RationalField q;
  const auto scheme = single(1, 2, 3, FieldSpec::rationals());
  const auto empty = condition_matrix(q, scheme, 2, 0);
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 2);
  const auto m1 = condition_matrix(q, scheme, 2, 1);
  REQUIRE(m1.rows() == 1);
  CHECK(ints(m1, 0) == std::vector<long>{1, 1});
  const auto m2 = condition_matrix(q, scheme, 2, 2);
  REQUIRE(m2.rows() == 3);
  CHECK(ints(m2, 0) == std::vector<long>{1, 1});
  CHECK(ints(m2, 1) == std::vector<long>{2, 0});
  CHECK(ints(m2, 2) == std::vector<long>{0, 2});
}

TEST_CASE("h0 examples") {
  const auto s123 = single(1, 2, 3);
  for (int n = 0; n < 10; ++n) CHECK(h0(s123, n, 0) == dim_S(s123.plane(), n));
  CHECK(h0(s123, 2, 1) == 1);
  CHECK(h0(s123, 4, 2) == 1);
  CHECK(h0(s123, -3, 1) == 0);
}

TEST_CASE("d_min examples") {
  CHECK(d_min(single(1, 2, 3), 1) == 2);
  CHECK(d_min(single(2, 3, 5), 1) == 5);
  CHECK(d_min(single(1, 1, 1), 1) == 1);
}

TEST_CASE("basis_forms examples") {
  for (auto field : {FieldSpec::rationals(), FieldSpec::default_prime()}) {
    const auto b1 = basis_forms(single(1, 2, 3, field), 2, 1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].proportional_to(form({{{2, 0, 0}, -1}, {{0, 1, 0}, 1}})));
    CHECK(b1[0].proportional_to(form({{{0, 1, 0}, 2}, {{2, 0, 0}, -2}})));
    CHECK_FALSE(b1[0].proportional_to(form({{{0, 1, 0}, 1}, {{2, 0, 0}, 1}})));
    CHECK(b1[0].to_string() == "-x^2 + y");

    const auto b0 = basis_forms(single(1, 2, 3, field), 2, 0);
    REQUIRE(b0.size() == 2);
    CHECK(b0[0].proportional_to(form({{{2, 0, 0}, 1}})));
    CHECK(b0[1].proportional_to(form({{{0, 1, 0}, 1}})));

    const auto b5 = basis_forms(single(2, 3, 5, field), 5, 1);
    REQUIRE(b5.size() == 1);
    CHECK(b5[0].proportional_to(form({{{1, 1, 0}, -1}, {{0, 0, 1}, 1}})));
  }
}

TEST_CASE("(y - x^2)^m lies in degree 2m of the m-th symbolic power") {
  const auto scheme = single(1, 2, 3, FieldSpec::rationals());
  RationalField q;
  for (int m = 1; m <= 5; ++m) {
    // Expand (y - x^2)^m by the binomial theorem.
    const auto monos = enumerate_monomials(scheme.plane(), 2 * m);
    std::vector<Rational> coeffs(monos.size(), Rational(0));
    WeightedForm power;
    BigInt binom = 1;
    for (int k = 0; k <= m; ++k) {
      const Monomial mono{2 * k, m - k, 0};
      Rational c(binom);
      if (k % 2 == 1) c = -c;
      for (std::size_t i = 0; i < monos.size(); ++i) {
        if (monos[i] == mono) coeffs[i] = c;
      }
      power.terms.emplace_back(mono, c);
      binom = binom * (m - k) / (k + 1);
    }
    const auto matrix = condition_matrix(q, scheme, 2 * m, m);
    for (const auto& v : multiply(matrix, std::span<const Rational>(coeffs))) CHECK(v == 0);
    const auto basis = basis_forms(scheme, 2 * m, m);
    REQUIRE(basis.size() == 1);
    std::sort(power.terms.begin(), power.terms.end(),
              [](const auto& l, const auto& r) { return monomial_order_less(l.first, r.first); });
    CHECK(basis[0].proportional_to(power));
  }
}

TEST_CASE("h0 bounds and monotonicity on grids") {
  const WeightedPlane p123(1, 2, 3), p235(2, 3, 5);
  const std::vector<FatPointScheme> schemes = {
      single(1, 1, 1), single(1, 2, 3), single(2, 3, 5),
      FatPointScheme(p123, {pt(1, 1, 1), pt(1, 2, 3)}, {1, 2}),
      FatPointScheme(p235, {pt(1, 1, 1), pt(2, 1, 3), pt(5, 7, 2)}, {1, 1, 1})};
  for (const auto& s : schemes) {
    const auto& plane = s.plane();
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 30; ++n) {
        const auto h = h0(s, n, m);
        const auto dim = dim_S(plane, n);
        CHECK(h <= dim);
        CHECK(static_cast<long>(h) >= static_cast<long>(dim) - static_cast<long>(s.condition_count(m)));
        if (m > 0) CHECK(h <= h0(s, n, m - 1));
        for (int w : {plane.a(), plane.b(), plane.c()}) CHECK(h >= h0(s, n - w, m));
      }
    }
  }
}

TEST_CASE("point files") {
  const std::string path = "test_points.txt";
  {
    std::ofstream out(path);
    out << "# two points\n1 1 1\n\n  # indented comment\n1/2, 3, -4\n";
  }
  const auto pts = read_point_file(path);
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].coords[0] == Rational(1, 2));
  CHECK(pts[1].coords[2] == -4);
  {
    std::ofstream out(path);
    out << "1 2\n";
  }
  CHECK_THROWS_AS(read_point_file(path), InvalidInput);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_point_file("does/not/exist.txt"), InvalidInput);
}

TEST_CASE("random points are seeded, valid and distinct") {
  const WeightedPlane plane(1, 2, 3);
  for (auto field : {FieldSpec::default_prime(), FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
    const auto a = random_points(plane, field, 5, 99);
    const auto b = random_points(plane, field, 5, 99);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_string() == b[i].to_string());
    CHECK_NOTHROW(FatPointScheme(plane, a, {}, field));
  }
  CHECK(random_points(plane, FieldSpec::default_prime(), 3, 1)[0].to_string() !=
        random_points(plane, FieldSpec::default_prime(), 3, 2)[0].to_string());
  // F_7 has far fewer than 100 distinct images.
  CHECK_THROWS_AS(random_points(plane, FieldSpec::prime_field(7), 100, 1), InvalidInput);
}

TEST_CASE("cache keys separate fields and cells") {
  const auto s = single(1, 2, 3);
  CHECK(s.cache_key(2, 1) != s.cache_key(1, 2));
  CHECK(s.cache_key(2, 1) != s.with_field(FieldSpec::prime_field(7)).cache_key(2, 1));
  CHECK(s.cache_key(2, 1) == single(1, 2, 3).cache_key(2, 1));
  // Same projective point, different representative.
  const FatPointScheme scaled(WeightedPlane(1, 2, 3), {pt(2, 2, 2)}, {1});
  CHECK(scaled.cache_key(3, 2) == FatPointScheme(WeightedPlane(1, 2, 3), {pt(1, 1, 1)}, {1}).cache_key(3, 2));
}
