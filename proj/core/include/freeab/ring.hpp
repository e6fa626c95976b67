#pragma once

// Base rings supported by the engine.
//
// Every ring is commutative with identity. Three concrete element domains
// back the four ring kinds:
//
//   IntegerRing    Z          GMP integers
//   ModularRing    Z/n, F_p   residues in [0, n) held in int64
//   RationalField  Q          GMP rationals
//
// Besides the ring operations each domain exposes the handful of principal
// ideal ring primitives the Smith normal form needs: a unimodular gcd step,
// exact divisibility, canonical associates and annihilators.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "freeab/errors.hpp"

namespace freeab {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class RingKind { Integers, IntegersMod, PrimeField, Rationals };

class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec integers_mod(std::int64_t n);
  static RingSpec prime_field(std::int64_t p);
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }

  // Accepts "zz", "integers", "zmod<n>", "gf<p>", "qq", "rationals".
  static RingSpec parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  // Zero for the infinite rings.
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_finite() const noexcept {
    return kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField;
  }
  bool is_field() const noexcept {
    return kind_ == RingKind::PrimeField || kind_ == RingKind::Rationals;
  }

  // Round-trips through parse().
  std::string name() const;
  std::string pretty() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::int64_t modulus_;
};

bool is_prime(std::int64_t n);

template <class V>
struct GcdStep {
  // [s t; u v] is invertible and maps (a, b) to (g, 0).
  V g, s, t, u, v;
};

template <class V>
struct Associate {
  // value * unit == canonical, unit invertible.
  V canonical;
  V unit;
};

template <class R>
concept ExactRing = std::copy_constructible<R> && requires(const R ring, const typename R::value_type a,
                                                           const typename R::value_type b, long long k) {
  typename R::value_type;
  { ring.spec() } -> std::same_as<RingSpec>;
  { ring.zero() } -> std::same_as<typename R::value_type>;
  { ring.one() } -> std::same_as<typename R::value_type>;
  { ring.from_int(k) } -> std::same_as<typename R::value_type>;
  { ring.add(a, b) } -> std::same_as<typename R::value_type>;
  { ring.sub(a, b) } -> std::same_as<typename R::value_type>;
  { ring.mul(a, b) } -> std::same_as<typename R::value_type>;
  { ring.neg(a) } -> std::same_as<typename R::value_type>;
  { ring.is_zero(a) } -> std::same_as<bool>;
  { ring.divides(a, b) } -> std::same_as<bool>;
  { ring.quotient(b, a) } -> std::same_as<typename R::value_type>;
  { ring.gcdex(a, b) } -> std::same_as<GcdStep<typename R::value_type>>;
  { ring.associate(a) } -> std::same_as<Associate<typename R::value_type>>;
  { ring.annihilator(a) } -> std::same_as<typename R::value_type>;
  { ring.pivot_weight(a) } -> std::same_as<BigInt>;
  { ring.to_string(a) } -> std::same_as<std::string>;
};

class IntegerRing {
 public:
  using value_type = BigInt;

  IntegerRing() = default;
  explicit IntegerRing(const RingSpec& spec);

  RingSpec spec() const { return RingSpec::integers(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long k) const { return BigInt(static_cast<long>(k)); }
  value_type from_big(const BigInt& k) const { return k; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }

  bool divides(const value_type& a, const value_type& b) const;
  value_type quotient(const value_type& b, const value_type& a) const;
  GcdStep<value_type> gcdex(const value_type& a, const value_type& b) const;
  Associate<value_type> associate(const value_type& a) const;
  value_type annihilator(const value_type& a) const { return is_zero(a) ? 1 : 0; }
  BigInt pivot_weight(const value_type& a) const { return abs(a); }

  std::string to_string(const value_type& a) const { return a.get_str(); }
};

class ModularRing {
 public:
  using value_type = std::int64_t;

  // Z/n or F_p; the spec must be one of the finite kinds.
  explicit ModularRing(const RingSpec& spec);

  RingSpec spec() const { return spec_; }
  std::int64_t modulus() const noexcept { return n_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % n_; }
  value_type from_int(long long k) const {
    long long r = k % n_;
    return r < 0 ? r + n_ : r;
  }
  value_type from_big(const BigInt& k) const;

  value_type add(value_type a, value_type b) const {
    value_type r = a + b;
    return r >= n_ ? r - n_ : r;
  }
  value_type sub(value_type a, value_type b) const {
    value_type r = a - b;
    return r < 0 ? r + n_ : r;
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<__int128>(a) * b) % n_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : n_ - a; }
  bool is_zero(value_type a) const { return a == 0; }

  bool divides(value_type a, value_type b) const;
  value_type quotient(value_type b, value_type a) const;
  GcdStep<value_type> gcdex(value_type a, value_type b) const;
  Associate<value_type> associate(value_type a) const;
  value_type annihilator(value_type a) const;
  BigInt pivot_weight(value_type a) const;

  // Invertible elements only.
  value_type inverse(value_type a) const;

  // Elements are indexed 0..n-1 by their canonical residue.
  std::int64_t size() const noexcept { return n_; }

  std::string to_string(value_type a) const { return std::to_string(a); }

 private:
  RingSpec spec_;
  std::int64_t n_;
};

class RationalField {
 public:
  using value_type = BigRational;

  RationalField() = default;
  explicit RationalField(const RingSpec& spec);

  RingSpec spec() const { return RingSpec::rationals(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long k) const { return BigRational(BigInt(static_cast<long>(k))); }
  value_type from_big(const BigInt& k) const { return BigRational(k); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }

  bool divides(const value_type& a, const value_type& b) const { return !is_zero(a) || is_zero(b); }
  value_type quotient(const value_type& b, const value_type& a) const;
  GcdStep<value_type> gcdex(const value_type& a, const value_type& b) const;
  Associate<value_type> associate(const value_type& a) const;
  value_type annihilator(const value_type& a) const { return is_zero(a) ? 1 : 0; }
  BigInt pivot_weight(const value_type& a) const { return is_zero(a) ? 0 : 1; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
};

static_assert(ExactRing<IntegerRing>);
static_assert(ExactRing<ModularRing>);
static_assert(ExactRing<RationalField>);

// Calls fn with the element domain matching spec.
template <class Fn>
decltype(auto) with_ring(const RingSpec& spec, Fn&& fn) {
  switch (spec.kind()) {
    case RingKind::Integers:
      return fn(IntegerRing{});
    case RingKind::Rationals:
      return fn(RationalField{});
    default:
      return fn(ModularRing{spec});
  }
}

template <ExactRing R>
void require_same_ring(const R& a, const R& b, std::string_view what) {
  if (!(a.spec() == b.spec())) {
    throw RingMismatch(std::string(what) + ": " + a.spec().name() + " vs " + b.spec().name());
  }
}

}  // namespace freeab
