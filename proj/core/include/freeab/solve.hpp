#pragma once

// Linear systems over the base ring, all routed through the Smith form.

#include <optional>
#include <string>
#include <vector>

#include "freeab/smith.hpp"

namespace freeab {

// Some X with A * X == B, or nothing when the system is inconsistent.
template <ExactRing R>
std::optional<Matrix<R>> solve_left(const Matrix<R>& a, const Matrix<R>& b) {
  require_same_ring(a.ring(), b.ring(), "solve_left");
  if (a.rows() != b.rows()) throw ShapeError("solve_left: A is " + a.shape_string() + ", B is " + b.shape_string());
  const R& ring = a.ring();
  SnfResult<R> snf = smith_normal_form(a);
  Matrix<R> c = snf.L * b;
  const std::size_t k = snf.diag.size();
  Matrix<R> y(ring, a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto& rhs = c(i, j);
      if (i < k && !ring.is_zero(snf.diag[i])) {
        if (!ring.divides(snf.diag[i], rhs)) return std::nullopt;
        y(i, j) = ring.quotient(rhs, snf.diag[i]);
      } else if (!ring.is_zero(rhs)) {
        return std::nullopt;
      }
    }
  }
  return snf.R_ * y;
}

// Some X with X * A == B (A is m x n, B is k x n, X is k x m).
template <ExactRing R>
std::optional<Matrix<R>> solve_right(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.cols()) throw ShapeError("solve_right: A is " + a.shape_string() + ", B is " + b.shape_string());
  auto xt = solve_left(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

// Columns generating {z : A z = 0}.
template <ExactRing R>
Matrix<R> right_kernel(const Matrix<R>& a) {
  const R& ring = a.ring();
  SnfResult<R> snf = smith_normal_form(a);
  std::vector<std::pair<std::size_t, typename R::value_type>> gens;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (i < snf.diag.size()) {
      auto ann = ring.annihilator(snf.diag[i]);
      if (!ring.is_zero(ann)) gens.emplace_back(i, ann);
    } else {
      gens.emplace_back(i, ring.one());
    }
  }
  Matrix<R> k(ring, a.cols(), gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t r = 0; r < a.cols(); ++r) k(r, g) = ring.mul(snf.R_(r, gens[g].first), gens[g].second);
  }
  return k;
}

// Rows generating {z : z A = 0}.
template <ExactRing R>
Matrix<R> left_kernel(const Matrix<R>& a) {
  return right_kernel(a.transpose()).transpose();
}

// A linear system whose unknowns are matrix blocks X_1..X_k and whose
// equations are sums of terms  P * X_b * Q  equated to a right-hand side.
// Flattening is row-major inside each block.
template <ExactRing R>
class LinearSystem {
 public:
  struct Shape {
    std::size_t rows, cols, offset;
  };

  explicit LinearSystem(R ring) : ring_(std::move(ring)) {}

  std::size_t add_unknown(std::size_t rows, std::size_t cols) {
    unknowns_.push_back({rows, cols, unknown_count_});
    unknown_count_ += rows * cols;
    return unknowns_.size() - 1;
  }

  // Equation  (sum of terms) == rhs.
  std::size_t add_equation(const Matrix<R>& rhs) {
    equations_.push_back({rhs.rows(), rhs.cols(), equation_count_});
    rhs_.push_back(rhs);
    equation_count_ += rhs.rows() * rhs.cols();
    return equations_.size() - 1;
  }

  std::size_t add_equation(std::size_t rows, std::size_t cols) { return add_equation(Matrix<R>(ring_, rows, cols)); }

  // Adds  left * X_block * right  to the given equation.
  void add_term(std::size_t equation, const Matrix<R>& left, std::size_t block, const Matrix<R>& right) {
    const Shape& e = equations_.at(equation);
    const Shape& x = unknowns_.at(block);
    if (left.rows() != e.rows || left.cols() != x.rows || right.rows() != x.cols || right.cols() != e.cols) {
      throw ShapeError("linear system term " + left.shape_string() + " * X(" + std::to_string(x.rows) + "x" +
                       std::to_string(x.cols) + ") * " + right.shape_string() + " in equation of shape " +
                       std::to_string(e.rows) + "x" + std::to_string(e.cols));
    }
    terms_.push_back({equation, block, left, right});
  }

  std::size_t unknown_count() const noexcept { return unknown_count_; }
  std::size_t equation_count() const noexcept { return equation_count_; }
  const Shape& unknown_shape(std::size_t block) const { return unknowns_.at(block); }

  Matrix<R> coefficients() const {
    Matrix<R> a(ring_, equation_count_, unknown_count_);
    for (const Term& term : terms_) {
      const Shape& e = equations_[term.equation];
      const Shape& x = unknowns_[term.block];
      for (std::size_t p = 0; p < e.rows; ++p)
        for (std::size_t i = 0; i < x.rows; ++i) {
          const auto& l = term.left(p, i);
          if (ring_.is_zero(l)) continue;
          for (std::size_t j = 0; j < x.cols; ++j)
            for (std::size_t q = 0; q < e.cols; ++q) {
              const auto& r = term.right(j, q);
              if (ring_.is_zero(r)) continue;
              auto& slot = a(e.offset + p * e.cols + q, x.offset + i * x.cols + j);
              slot = ring_.add(slot, ring_.mul(l, r));
            }
        }
    }
    return a;
  }

  Matrix<R> rhs() const {
    Matrix<R> b(ring_, equation_count_, 1);
    for (std::size_t k = 0; k < equations_.size(); ++k) {
      const Shape& e = equations_[k];
      for (std::size_t p = 0; p < e.rows; ++p)
        for (std::size_t q = 0; q < e.cols; ++q) b(e.offset + p * e.cols + q, 0) = rhs_[k](p, q);
    }
    return b;
  }

  // Splits a flat column of unknown values back into blocks.
  std::vector<Matrix<R>> unpack(const Matrix<R>& flat, std::size_t column = 0) const {
    std::vector<Matrix<R>> blocks;
    blocks.reserve(unknowns_.size());
    for (const Shape& x : unknowns_) {
      Matrix<R> m(ring_, x.rows, x.cols);
      for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) m(i, j) = flat(x.offset + i * x.cols + j, column);
      blocks.push_back(std::move(m));
    }
    return blocks;
  }

  std::optional<std::vector<Matrix<R>>> solve() const {
    auto z = solve_left(coefficients(), rhs());
    if (!z) return std::nullopt;
    return unpack(*z);
  }

  // Generators of the homogeneous solution module, one block list each.
  std::vector<std::vector<Matrix<R>>> kernel() const {
    Matrix<R> k = right_kernel(coefficients());
    std::vector<std::vector<Matrix<R>>> out;
    out.reserve(k.cols());
    for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unpack(k, c));
    return out;
  }

 private:
  struct Term {
    std::size_t equation, block;
    Matrix<R> left, right;
  };

  R ring_;
  std::vector<Shape> unknowns_;
  std::vector<Shape> equations_;
  std::vector<Matrix<R>> rhs_;
  std::vector<Term> terms_;
  std::size_t unknown_count_ = 0;
  std::size_t equation_count_ = 0;
};

template <ExactRing R>
struct HomotopySolution {
  Matrix<R> s;
  Matrix<R> t;
};

// Finds S, T with  C == G1 * S + T * F2.
//   G1: y2 x y1,  F2: x3 x x2,  C: y2 x x2   =>   S: y1 x x2,  T: y2 x x3.
template <ExactRing R>
std::optional<HomotopySolution<R>> homotopy_solve(const Matrix<R>& g1, const Matrix<R>& f2, const Matrix<R>& c) {
  require_same_ring(g1.ring(), f2.ring(), "homotopy_solve");
  require_same_ring(g1.ring(), c.ring(), "homotopy_solve");
  if (g1.rows() != c.rows() || f2.cols() != c.cols()) {
    throw ShapeError("homotopy_solve: G1 " + g1.shape_string() + ", F2 " + f2.shape_string() + ", C " +
                     c.shape_string());
  }
  const R& ring = c.ring();
  LinearSystem<R> sys(ring);
  std::size_t s = sys.add_unknown(g1.cols(), c.cols());
  std::size_t t = sys.add_unknown(c.rows(), f2.rows());
  std::size_t eq = sys.add_equation(c);
  sys.add_term(eq, g1, s, Matrix<R>::identity(ring, c.cols()));
  sys.add_term(eq, Matrix<R>::identity(ring, c.rows()), t, f2);
  auto blocks = sys.solve();
  if (!blocks) return std::nullopt;
  return HomotopySolution<R>{std::move((*blocks)[0]), std::move((*blocks)[1])};
}

}  // namespace freeab
