#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "wpp/errors.hpp"

namespace wpp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// 2^62 - 57, the largest prime below 2^62. Default working modulus.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

/// a * b mod p for p < 2^63 via an extended-precision quotient estimate.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const auto q = static_cast<std::uint64_t>(static_cast<long double>(a) * static_cast<long double>(b) /
                                            static_cast<long double>(p));
  const auto r = static_cast<std::int64_t>(a * b - q * p);
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + sp : (r >= sp ? r - sp : r));
}
/// Reference a * b mod p through 128-bit division.
std::uint64_t mul_mod_wide(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

std::string to_string(const Rational& q);
/// Parses "num" or "num/den"; throws InvalidInput on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Arithmetic in F_p for a prime p < 2^63. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element x) const { return x == 0; }

  Element add(Element x, Element y) const {
    Element s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element x, Element y) const { return x >= y ? x - y : x + (p_ - y); }
  Element neg(Element x) const { return x == 0 ? 0 : p_ - x; }
  Element mul(Element x, Element y) const { return mul_mod(x, y, p_); }
  Element inv(Element x) const;
  Element pow(Element x, std::uint64_t e) const { return pow_mod(x, e, p_); }

  Element from_int(std::int64_t v) const;
  Element from_integer(const BigInt& v) const;
  /// Throws InvalidInput when the denominator vanishes mod p.
  Element from_rational(const Rational& q) const;
  /// Symmetric representative in (-p/2, p/2].
  Rational to_rational(Element x) const;
  std::string format(Element x) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Arithmetic in Q, exact, backed by GMP.
class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  bool is_zero(const Element& x) const { return sgn(x) == 0; }

  Element add(const Element& x, const Element& y) const { return x + y; }
  Element sub(const Element& x, const Element& y) const { return x - y; }
  Element neg(const Element& x) const { return -x; }
  Element mul(const Element& x, const Element& y) const { return x * y; }
  Element inv(const Element& x) const;
  Element pow(const Element& x, std::uint64_t e) const;

  Element from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Element from_integer(const BigInt& v) const { return Rational(v); }
  Element from_rational(const Rational& q) const { return q; }
  Rational to_rational(const Element& x) const { return x; }
  std::string format(const Element& x) const { return to_string(x); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Working field for every linear-system count.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws InvalidInput unless p is a prime below 2^63.
  static FieldSpec prime_field(std::uint64_t p);
  static FieldSpec default_prime() { return prime_field(kDefaultPrime); }
  /// "q", "fp:auto" or "fp:P".
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint64_t prime() const { return prime_; }

  /// Throws InvalidInput if the characteristic divides abc.
  void require_coprime_to(std::uint64_t abc) const;

  /// "q" or "fp:P"; stable, used in cache keys and reports.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}

  Kind kind_;
  std::uint64_t prime_;
};

/// Calls fn with a PrimeField or a RationalField according to spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime()) return std::forward<Fn>(fn)(PrimeField(spec.prime()));
  return std::forward<Fn>(fn)(RationalField{});
}

}  // namespace wpp
