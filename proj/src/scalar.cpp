#include "wpp/scalar.hpp"

#include <array>

namespace wpp {

std::uint64_t mul_mod_wide(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  const bool fast = p < (1ULL << 63);
  auto mul = [&](std::uint64_t x, std::uint64_t y) { return fast ? mul_mod(x, y, p) : mul_mod_wide(x, y, p); };
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod_wide(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  auto valid_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InvalidInput("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime_u64(p)) {
    throw InvalidInput("modulus " + std::to_string(p) + " is not a prime below 2^63");
  }
}

PrimeField::Element PrimeField::inv(Element x) const {
  if (x == 0) throw InvariantViolation("inverse of zero in F_p");
  return pow_mod(x, p_ - 2, p_);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Element>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

PrimeField::Element PrimeField::from_integer(const BigInt& v) const {
  BigInt r;
  BigInt modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
  Element den = from_integer(q.get_den());
  if (den == 0) throw InvalidInput("denominator of " + to_string(q) + " vanishes mod " + std::to_string(p_));
  return mul(from_integer(q.get_num()), inv(den));
}

Rational PrimeField::to_rational(Element x) const {
  BigInt v;
  mpz_import(v.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  if (x > p_ / 2) {
    BigInt modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
    v -= modulus;
  }
  return Rational(v);
}

std::string PrimeField::format(Element x) const { return to_string(to_rational(x)); }

RationalField::Element RationalField::inv(const Element& x) const {
  if (sgn(x) == 0) throw InvariantViolation("inverse of zero in Q");
  return 1 / x;
}

RationalField::Element RationalField::pow(const Element& x, std::uint64_t e) const {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  PrimeField check(p);
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "fp:auto" || text == "fp") return default_prime();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19) {
      throw InvalidInput("malformed field '" + text + "'");
    }
    return prime_field(std::stoull(digits));
  }
  throw InvalidInput("unknown field '" + text + "' (expected q, fp:auto or fp:P)");
}

void FieldSpec::require_coprime_to(std::uint64_t abc) const {
  if (is_prime() && abc % prime_ == 0) {
    throw InvalidInput("characteristic " + std::to_string(prime_) + " divides abc = " + std::to_string(abc));
  }
}

std::string FieldSpec::to_string() const { return is_prime() ? "fp:" + std::to_string(prime_) : "q"; }

}  // namespace wpp
