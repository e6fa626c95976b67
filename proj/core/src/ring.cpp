#include "freeab/ring.hpp"

#include <charconv>
#include <numeric>

namespace freeab {

namespace {

// Extended Euclid on non-negative int64: returns g with s*a + t*b == g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    std::int64_t s2 = s0 - q * s1;
    std::int64_t t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  s = s0;
  t = t0;
  return a;
}

std::int64_t parse_modulus(std::string_view digits, std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error("unrecognised ring descriptor '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

RingSpec RingSpec::integers_mod(std::int64_t n) {
  if (n < 2) throw Error("Z/n requires n >= 2, got " + std::to_string(n));
  if (n > (std::int64_t{1} << 62)) throw Unsupported("modulus too large: " + std::to_string(n));
  return RingSpec(RingKind::IntegersMod, n);
}

RingSpec RingSpec::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw Error("F_p requires p prime, got " + std::to_string(p));
  if (p > (std::int64_t{1} << 62)) throw Unsupported("modulus too large: " + std::to_string(p));
  return RingSpec(RingKind::PrimeField, p);
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "zz" || text == "integers" || text == "Z") return integers();
  if (text == "qq" || text == "rationals" || text == "Q") return rationals();
  if (text.starts_with("zmod")) return integers_mod(parse_modulus(text.substr(4), text));
  if (text.starts_with("gf")) return prime_field(parse_modulus(text.substr(2), text));
  throw Error("unrecognised ring descriptor '" + std::string(text) + "'");
}

std::string RingSpec::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "zz";
    case RingKind::Rationals:
      return "qq";
    case RingKind::IntegersMod:
      return "zmod" + std::to_string(modulus_);
    case RingKind::PrimeField:
      return "gf" + std::to_string(modulus_);
  }
  return "?";
}

std::string RingSpec::pretty() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::IntegersMod:
      return "Z/" + std::to_string(modulus_);
    case RingKind::PrimeField:
      return "F_" + std::to_string(modulus_);
  }
  return "?";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// IntegerRing

IntegerRing::IntegerRing(const RingSpec& spec) {
  if (spec.kind() != RingKind::Integers) throw RingMismatch("IntegerRing built from " + spec.name());
}

bool IntegerRing::divides(const value_type& a, const value_type& b) const {
  if (sgn(a) == 0) return sgn(b) == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

IntegerRing::value_type IntegerRing::quotient(const value_type& b, const value_type& a) const {
  if (sgn(a) == 0) return 0;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
  return q;
}

GcdStep<BigInt> IntegerRing::gcdex(const value_type& a, const value_type& b) const {
  if (sgn(b) == 0) return {a, 1, 0, 0, 1};
  if (sgn(a) == 0) return {b, 0, 1, -1, 0};
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {g, s, t, -(b / g), a / g};
}

Associate<BigInt> IntegerRing::associate(const value_type& a) const {
  if (sgn(a) < 0) return {-a, -1};
  return {a, 1};
}

// ---------------------------------------------------------------------------
// ModularRing

ModularRing::ModularRing(const RingSpec& spec) : spec_(spec), n_(spec.modulus()) {
  if (!spec.is_finite()) throw RingMismatch("ModularRing built from " + spec.name());
}

ModularRing::value_type ModularRing::from_big(const BigInt& k) const {
  BigInt r = k % BigInt(static_cast<long>(n_));
  if (sgn(r) < 0) r += BigInt(static_cast<long>(n_));
  return r.get_si();
}

bool ModularRing::divides(value_type a, value_type b) const {
  std::int64_t g = std::gcd(a, n_);
  return b % g == 0;
}

ModularRing::value_type ModularRing::quotient(value_type b, value_type a) const {
  // a = g a', n = g n'; q = (b / g) * a'^{-1} mod n'.
  std::int64_t g = std::gcd(a, n_);
  std::int64_t n1 = n_ / g;
  if (n1 == 1) return 0;
  std::int64_t a1 = (a / g) % n1;
  std::int64_t s, t;
  ext_gcd(a1, n1, s, t);
  s %= n1;
  if (s < 0) s += n1;
  std::int64_t q = static_cast<std::int64_t>((static_cast<__int128>(b / g) * s) % n1);
  return q;
}

GcdStep<std::int64_t> ModularRing::gcdex(value_type a, value_type b) const {
  // Integer gcd step on the lifts; the determinant is 1 over Z and so
  // stays 1 after reduction.
  if (b == 0) return {a, 1 % n_, 0, 0, 1 % n_};
  if (a == 0) return {b, 0, 1 % n_, neg(1 % n_), 0};
  std::int64_t s, t;
  std::int64_t g = ext_gcd(a, b, s, t);
  return {g % n_, from_int(s), from_int(t), from_int(-(b / g)), from_int(a / g)};
}

Associate<std::int64_t> ModularRing::associate(value_type a) const {
  if (a == 0) return {0, one()};
  std::int64_t g = std::gcd(a, n_);
  std::int64_t n1 = n_ / g;
  std::int64_t u = 0;
  if (n1 > 1) {
    std::int64_t s, t;
    ext_gcd((a / g) % n1, n1, s, t);
    u = s % n1;
    if (u < 0) u += n1;
  }
  // Any lift u + k n' of the inverse mod n' works; pick one that is a unit mod n.
  while (std::gcd(u, n_) != 1) u += n1;
  u %= n_;
  return {g % n_, u};
}

ModularRing::value_type ModularRing::annihilator(value_type a) const {
  return (n_ / std::gcd(a, n_)) % n_;
}

BigInt ModularRing::pivot_weight(value_type a) const {
  return BigInt(static_cast<long>(a == 0 ? n_ : std::gcd(a, n_)));
}

ModularRing::value_type ModularRing::inverse(value_type a) const {
  std::int64_t s, t;
  if (ext_gcd(a, n_, s, t) != 1) throw Error(std::to_string(a) + " is not invertible mod " + std::to_string(n_));
  return from_int(s);
}

// ---------------------------------------------------------------------------
// RationalField

RationalField::RationalField(const RingSpec& spec) {
  if (spec.kind() != RingKind::Rationals) throw RingMismatch("RationalField built from " + spec.name());
}

RationalField::value_type RationalField::quotient(const value_type& b, const value_type& a) const {
  if (is_zero(a)) return 0;
  return b / a;
}

GcdStep<BigRational> RationalField::gcdex(const value_type& a, const value_type& b) const {
  if (is_zero(b)) return {a, 1, 0, 0, 1};
  if (is_zero(a)) return {b, 0, 1, -1, 0};
  return {a, 1, 0, -(b / a), 1};
}

Associate<BigRational> RationalField::associate(const value_type& a) const {
  if (is_zero(a)) return {0, 1};
  return {1, 1 / a};
}

}  // namespace freeab
