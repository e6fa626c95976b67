#pragma once

// Test batteries: exhaustive enumeration of small chain objects and finite
// modules, and seeded random generators.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "freeab/chain.hpp"

namespace freeab {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

// All rank triples in [0, max_rank]^3, r2 outermost.
inline std::vector<Ranks> rank_triples(std::size_t max_rank) {
  std::vector<Ranks> out;
  for (std::size_t r2 = 0; r2 <= max_rank; ++r2)
    for (std::size_t r1 = 0; r1 <= max_rank; ++r1)
      for (std::size_t r3 = 0; r3 <= max_rank; ++r3) out.push_back({r1, r2, r3});
  return out;
}

// Number of chain objects with the given ranks over a ring with q elements.
inline std::size_t chain_count(const Ranks& r, std::size_t q) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < r.r2 * (r.r1 + r.r3); ++i) n *= q;
  return n;
}

inline std::size_t chain_count(std::size_t max_rank, std::size_t q) {
  std::size_t n = 0;
  for (const Ranks& r : rank_triples(max_rank)) n += chain_count(r, q);
  return n;
}

// The index-th chain with ranks r: entries of S then T in row-major order,
// read off the base-q digits of index (least significant first).
inline ChainObject<ModularRing> chain_from_index(const ModularRing& ring, Side side, const Ranks& r, std::size_t index) {
  const auto q = static_cast<std::size_t>(ring.modulus());
  Matrix<ModularRing> s(ring, r.r2, r.r1), t(ring, r.r3, r.r2);
  for (std::size_t i = 0; i < r.r2; ++i)
    for (std::size_t j = 0; j < r.r1; ++j, index /= q) s(i, j) = static_cast<std::int64_t>(index % q);
  for (std::size_t i = 0; i < r.r3; ++i)
    for (std::size_t j = 0; j < r.r2; ++j, index /= q) t(i, j) = static_cast<std::int64_t>(index % q);
  return ChainObject<ModularRing>::from_columns(side, s, t);
}

// Calls fn on every chain object with ranks <= max_rank.
inline void for_each_chain(const ModularRing& ring, Side side, std::size_t max_rank,
                           const std::function<void(const ChainObject<ModularRing>&)>& fn) {
  const auto q = static_cast<std::size_t>(ring.modulus());
  for (const Ranks& r : rank_triples(max_rank)) {
    const std::size_t n = chain_count(r, q);
    for (std::size_t i = 0; i < n; ++i) fn(chain_from_index(ring, side, r, i));
  }
}

// One module per isomorphism class among modules of order <= max_order over
// a finite ring, each in diagonal form d_1 | d_2 | ... with every d_i a
// divisor of n greater than 1. Ordered by order, then by factor list.
std::vector<FpModule<ModularRing>> finite_modules(const ModularRing& ring, Side side, std::size_t max_order);

template <ExactRing R>
typename R::value_type random_entry(const R& ring, Rng& rng, long long max_entry) {
  if constexpr (std::is_same_v<R, ModularRing>) {
    (void)max_entry;
    std::uniform_int_distribution<std::int64_t> dist(0, ring.modulus() - 1);
    return dist(rng);
  } else {
    std::uniform_int_distribution<long long> dist(-max_entry, max_entry);
    return ring.from_int(dist(rng));
  }
}

// Entries uniform over a finite ring, or in [-max_entry, max_entry].
template <ExactRing R>
Matrix<R> random_matrix(const R& ring, std::size_t rows, std::size_t cols, Rng& rng, long long max_entry = 3) {
  Matrix<R> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_entry(ring, rng, max_entry);
  return m;
}

inline Ranks random_ranks(Rng& rng, std::size_t max_rank) {
  std::uniform_int_distribution<std::size_t> dist(0, max_rank);
  Ranks r;
  r.r1 = dist(rng);
  r.r2 = dist(rng);
  r.r3 = dist(rng);
  return r;
}

template <ExactRing R>
ChainObject<R> random_object(const R& ring, Side side, const Ranks& r, Rng& rng, long long max_entry = 3) {
  return ChainObject<R>::from_columns(side, random_matrix(ring, r.r2, r.r1, rng, max_entry),
                                      random_matrix(ring, r.r3, r.r2, rng, max_entry));
}

template <ExactRing R>
ChainObject<R> random_object(const R& ring, Side side, std::size_t max_rank, Rng& rng, long long max_entry = 3) {
  return random_object(ring, side, random_ranks(rng, max_rank), rng, max_entry);
}

// A random combination of Hom generators; coefficients uniform over a
// finite ring, or in [-2, 2].
template <ExactRing R>
ChainMorphism<R> random_morphism(const ChainObject<R>& x, const ChainObject<R>& y, Rng& rng) {
  ChainMorphism<R> f = ChainMorphism<R>::zero(x, y);
  for (const auto& g : hom_generators(x, y)) {
    auto c = random_entry(x.ring(), rng, 2);
    if (!x.ring().is_zero(c)) f = f + g.scaled(c);
  }
  return f;
}

template <ExactRing R>
ChainMorphism<R> random_morphism(const R& ring, Side side, std::size_t max_rank, Rng& rng, long long max_entry = 3) {
  ChainObject<R> x = random_object(ring, side, max_rank, rng, max_entry);
  ChainObject<R> y = random_object(ring, side, max_rank, rng, max_entry);
  return random_morphism(x, y, rng);
}

}  // namespace freeab
