#pragma once

// Dense exact matrices over a base ring.
//
// Storage is row-major. Entries are always held in canonical form (residues
// in [0, n) for Z/n, reduced fractions for Q), so equality is entrywise.
// Matrices with zero rows or zero columns are ordinary values: they are the
// unique maps into or out of the zero module and multiply accordingly.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freeab/errors.hpp"
#include "freeab/ring.hpp"

namespace freeab {

template <ExactRing R>
class Matrix {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  explicit Matrix(R ring = R{}, std::size_t rows = 0, std::size_t cols = 0)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = ring.one();
    return m;
  }

  // Builds from integer rows, reducing into the ring. All rows must have
  // equal length; an empty list gives a 0x0 matrix.
  static Matrix from_rows(const R& ring, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(ring, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged matrix rows");
      std::size_t j = 0;
      for (long long v : row) m.data_[i * c + j++] = ring.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix from_values(const R& ring, std::size_t rows, std::size_t cols, std::vector<value_type> values) {
    if (values.size() != rows * cols) throw ShapeError("value count does not match shape");
    Matrix m(ring, rows, cols);
    m.data_ = std::move(values);
    return m;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  // Callers writing through this reference must store canonical values.
  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<value_type>& values() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!ring_.is_zero(v)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
  }

  Matrix negated() const {
    Matrix m(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = ring_.neg(data_[k]);
    return m;
  }

  Matrix scaled(const value_type& c) const {
    Matrix m(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = ring_.mul(c, data_[k]);
    return m;
  }

  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix m(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
    return m;
  }

  // Copies `src` into this matrix with its top-left corner at (r0, c0).
  void paste(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw ShapeError("paste out of range");
    for (std::size_t i = 0; i < src.rows_; ++i)
      for (std::size_t j = 0; j < src.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = src.data_[i * src.cols_ + j];
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_shape(b, "matrix sum");
    Matrix m(a.ring_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.ring_.add(a.data_[k], b.data_[k]);
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_shape(b, "matrix difference");
    Matrix m(a.ring_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.ring_.sub(a.data_[k], b.data_[k]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_ring(a.ring_, b.ring_, "matrix product");
    if (a.cols_ != b.rows_) {
      throw ShapeError("matrix product " + a.shape_string() + " * " + b.shape_string());
    }
    Matrix m(a.ring_, a.rows_, b.cols_);
    const R& ring = a.ring_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& x = a.data_[i * a.cols_ + k];
        if (ring.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const value_type& y = b.data_[k * b.cols_ + j];
          if (ring.is_zero(y)) continue;
          value_type& slot = m.data_[i * b.cols_ + j];
          slot = ring.add(slot, ring.mul(x, y));
        }
      }
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_.spec() == b.ring_.spec() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m.ring_.to_string(m(i, j));
      os << ']';
    }
    return os << "] (" << m.shape_string() << ')';
  }

 private:
  void require_shape(const Matrix& b, const char* what) const {
    require_same_ring(ring_, b.ring_, what);
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw ShapeError(std::string(what) + " " + shape_string() + " vs " + b.shape_string());
    }
  }

  R ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <ExactRing R>
Matrix<R> hstack(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack " + a.shape_string() + " | " + b.shape_string());
  Matrix<R> m(a.ring(), a.rows(), a.cols() + b.cols());
  m.paste(0, 0, a);
  m.paste(0, a.cols(), b);
  return m;
}

template <ExactRing R>
Matrix<R> vstack(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack " + a.shape_string() + " / " + b.shape_string());
  Matrix<R> m(a.ring(), a.rows() + b.rows(), a.cols());
  m.paste(0, 0, a);
  m.paste(a.rows(), 0, b);
  return m;
}

template <ExactRing R>
Matrix<R> block_diag(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  m.paste(0, 0, a);
  m.paste(a.rows(), a.cols(), b);
  return m;
}

// Kronecker product: entry ((i,k),(j,l)) = a(i,j) * b(k,l).
template <ExactRing R>
Matrix<R> kronecker(const Matrix<R>& a, const Matrix<R>& b) {
  const R& ring = a.ring();
  Matrix<R> m(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ring.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
    }
  return m;
}

}  // namespace freeab
