#pragma once

// Smith normal form over the supported principal ideal rings.
//
// For A (m x n) computes D = L * A * R with L, R invertible and D diagonal,
// d_0 | d_1 | ... with zeros last. Over fields the diagonal is 1...1 0...0;
// over Z the entries are non-negative; over Z/n each entry is the canonical
// associate gcd(d, n) (0 stays 0). The Z/n case runs integer gcd steps on
// the lifted residues and reduces every entry back mod n, so intermediate
// values never leave [0, n).

#include <cstddef>
#include <utility>
#include <vector>

#include "freeab/matrix.hpp"

namespace freeab {

template <ExactRing R>
struct SnfResult {
  Matrix<R> D;
  Matrix<R> L;
  Matrix<R> R_;
  // Diagonal of D, length min(rows, cols).
  std::vector<typename R::value_type> diag;

  // Number of nonzero diagonal entries.
  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diag) {
      if (!D.ring().is_zero(d)) ++r;
    }
    return r;
  }
};

namespace detail {

// Elementary operations performed in place; each one is mirrored on the
// transform so that L * A0 * R == A holds after every step.
template <ExactRing R>
class SmithWorker {
 public:
  using V = typename R::value_type;

  SmithWorker(const Matrix<R>& a, bool track)
      : ring_(a.ring()), a_(a), l_(Matrix<R>::identity(a.ring(), track ? a.rows() : 0)),
        r_(Matrix<R>::identity(a.ring(), track ? a.cols() : 0)), track_(track) {}

  void run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_pivot(t)) break;
      for (;;) {
        clear_cross(t);
        // Divisibility: fold an offending row into the pivot row and retry.
        bool fixed = true;
        for (std::size_t i = t + 1; i < m && fixed; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!ring_.divides(a_(t, t), a_(i, j))) {
              add_row(t, i, ring_.one());
              fixed = false;
              break;
            }
          }
        }
        if (fixed) break;
      }
      Associate<V> as = ring_.associate(a_(t, t));
      if (!(as.unit == ring_.one())) scale_row(t, as.unit);
      a_(t, t) = as.canonical;
    }
  }

  Matrix<R>& a() { return a_; }
  Matrix<R>& l() { return l_; }
  Matrix<R>& r() { return r_; }

 private:
  // Brings the lowest-weight nonzero entry of the trailing block to (t, t).
  bool move_pivot(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    std::size_t bi = m, bj = n;
    BigInt best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (ring_.is_zero(a_(i, j))) continue;
        BigInt w = ring_.pivot_weight(a_(i, j));
        if (bi == m || w < best) {
          best = w;
          bi = i;
          bj = j;
        }
      }
    if (bi == m) return false;
    if (bi != t) swap_rows(t, bi);
    if (bj != t) swap_cols(t, bj);
    return true;
  }

  void clear_cross(std::size_t t) {
    const std::size_t m = a_.rows(), n = a_.cols();
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (ring_.is_zero(a_(i, t))) continue;
        if (ring_.divides(a_(t, t), a_(i, t))) {
          add_row(i, t, ring_.neg(ring_.quotient(a_(i, t), a_(t, t))));
        } else {
          GcdStep<V> g = ring_.gcdex(a_(t, t), a_(i, t));
          combine_rows(t, i, g);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (ring_.is_zero(a_(t, j))) continue;
        if (ring_.divides(a_(t, t), a_(t, j))) {
          add_col(j, t, ring_.neg(ring_.quotient(a_(t, j), a_(t, t))));
        } else {
          GcdStep<V> g = ring_.gcdex(a_(t, t), a_(t, j));
          combine_cols(t, j, g);
          dirty = true;
        }
      }
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    if (track_)
      for (std::size_t j = 0; j < l_.cols(); ++j) std::swap(l_(i, j), l_(k, j));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    if (track_)
      for (std::size_t i = 0; i < r_.rows(); ++i) std::swap(r_(i, j), r_(i, k));
  }

  // row_i += c * row_k
  void add_row(std::size_t i, std::size_t k, const V& c) {
    add_row_in(a_, i, k, c);
    if (track_) add_row_in(l_, i, k, c);
  }

  void add_col(std::size_t j, std::size_t k, const V& c) {
    add_col_in(a_, j, k, c);
    if (track_) add_col_in(r_, j, k, c);
  }

  void scale_row(std::size_t i, const V& c) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = ring_.mul(c, a_(i, j));
    if (track_)
      for (std::size_t j = 0; j < l_.cols(); ++j) l_(i, j) = ring_.mul(c, l_(i, j));
  }

  void combine_rows(std::size_t t, std::size_t i, const GcdStep<V>& g) {
    combine_rows_in(a_, t, i, g);
    if (track_) combine_rows_in(l_, t, i, g);
  }

  void combine_cols(std::size_t t, std::size_t j, const GcdStep<V>& g) {
    combine_cols_in(a_, t, j, g);
    if (track_) combine_cols_in(r_, t, j, g);
  }

  void add_row_in(Matrix<R>& m, std::size_t i, std::size_t k, const V& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!ring_.is_zero(m(k, j))) m(i, j) = ring_.add(m(i, j), ring_.mul(c, m(k, j)));
    }
  }

  void add_col_in(Matrix<R>& m, std::size_t j, std::size_t k, const V& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!ring_.is_zero(m(i, k))) m(i, j) = ring_.add(m(i, j), ring_.mul(c, m(i, k)));
    }
  }

  // [row_t; row_i] <- [s t; u v] [row_t; row_i]
  void combine_rows_in(Matrix<R>& m, std::size_t t, std::size_t i, const GcdStep<V>& g) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      V x = m(t, j), y = m(i, j);
      m(t, j) = ring_.add(ring_.mul(g.s, x), ring_.mul(g.t, y));
      m(i, j) = ring_.add(ring_.mul(g.u, x), ring_.mul(g.v, y));
    }
  }

  // [col_t, col_j] <- [col_t, col_j] [s u; t v]
  void combine_cols_in(Matrix<R>& m, std::size_t t, std::size_t j, const GcdStep<V>& g) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      V x = m(i, t), y = m(i, j);
      m(i, t) = ring_.add(ring_.mul(g.s, x), ring_.mul(g.t, y));
      m(i, j) = ring_.add(ring_.mul(g.u, x), ring_.mul(g.v, y));
    }
  }

  R ring_;
  Matrix<R> a_;
  Matrix<R> l_;
  Matrix<R> r_;
  bool track_;
};

}  // namespace detail

template <ExactRing R>
SnfResult<R> smith_normal_form(const Matrix<R>& a) {
  detail::SmithWorker<R> worker(a, true);
  worker.run();
  SnfResult<R> out{std::move(worker.a()), std::move(worker.l()), std::move(worker.r()), {}};
  const std::size_t k = a.rows() < a.cols() ? a.rows() : a.cols();
  out.diag.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.diag.push_back(out.D(i, i));
  return out;
}

// Diagonal only; skips the transform bookkeeping.
template <ExactRing R>
std::vector<typename R::value_type> smith_diagonal(const Matrix<R>& a) {
  detail::SmithWorker<R> worker(a, false);
  worker.run();
  const std::size_t k = a.rows() < a.cols() ? a.rows() : a.cols();
  std::vector<typename R::value_type> diag;
  diag.reserve(k);
  for (std::size_t i = 0; i < k; ++i) diag.push_back(worker.a()(i, i));
  return diag;
}

}  // namespace freeab
