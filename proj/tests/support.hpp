#pragma once

#include <initializer_list>

#include "freeab/freeab.hpp"

namespace freeab::testing {

inline const IntegerRing kZ{};
inline const RationalField kQ{};
inline ModularRing zmod(std::int64_t n) { return ModularRing(RingSpec::integers_mod(n)); }
inline ModularRing gf(std::int64_t p) { return ModularRing(RingSpec::prime_field(p)); }

template <ExactRing R>
Matrix<R> mat(const R& ring, std::initializer_list<std::initializer_list<long long>> rows) {
  return Matrix<R>::from_rows(ring, rows);
}

template <ExactRing R>
Matrix<R> empty(const R& ring, std::size_t rows, std::size_t cols) {
  return Matrix<R>(ring, rows, cols);
}

// Right chain from column-convention matrices.
template <ExactRing R>
ChainObject<R> chain(const Matrix<R>& s, const Matrix<R>& t, Side side = Side::Right) {
  return ChainObject<R>::from_columns(side, s, t);
}

template <ExactRing R>
FpModule<R> cyclic(const R& ring, long long order, Side side = Side::Right) {
  return FpModule<R>::cyclic(ring, side, order);
}

inline BigInt order_of(const GroupInvariants& g) { return *g.order(); }

}  // namespace freeab::testing
