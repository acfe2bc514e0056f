#pragma once

// Small dense matrices over an exact field (Rational or GaussianRational),
// with fraction-exact Gaussian elimination.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "superspace/errors.hpp"
#include "superspace/rational.hpp"

namespace superspace {

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeMismatch("ragged matrix literal");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b);
    DenseMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b);
    DenseMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("inner dimensions differ");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend DenseMatrix operator*(const T& c, DenseMatrix a) {
    for (auto& v : a.data_) v = c * v;
    return a;
  }
  friend DenseMatrix operator-(DenseMatrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw ShapeMismatch("block outside the matrix");
    DenseMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block outside the matrix");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  DenseMatrix transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

  // Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t piv = row;
      while (piv < rows_ && is_zero((*this)(piv, col))) ++piv;
      if (piv == rows_) continue;
      swap_rows(piv, row);
      T inv = T(1) / (*this)(row, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || is_zero((*this)(r, col))) continue;
        T f = (*this)(r, col);
        for (std::size_t j = col; j < cols_; ++j) (*this)(r, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    DenseMatrix copy = *this;
    return copy.row_reduce().size();
  }

  T determinant() const {
    if (rows_ != cols_) throw ShapeMismatch("determinant of a non-square matrix");
    DenseMatrix a = *this;
    T det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = col;
      while (piv < rows_ && is_zero(a(piv, col))) ++piv;
      if (piv == rows_) return T(0);
      if (piv != col) {
        a.swap_rows(piv, col);
        det = -det;
      }
      det *= a(col, col);
      T inv = T(1) / a(col, col);
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (is_zero(a(r, col))) continue;
        T f = a(r, col) * inv;
        for (std::size_t j = col; j < cols_; ++j) a(r, j) -= f * a(col, j);
      }
    }
    return det;
  }

  DenseMatrix inverse() const {
    if (rows_ != cols_) throw ShapeMismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    DenseMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = T(1);
    }
    auto pivots = aug.row_reduce();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw NotInvertible("singular matrix");
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
  }

  // Basis of {v : M v = 0}, one column vector per entry.
  std::vector<std::vector<T>> nullspace() const {
    DenseMatrix r = *this;
    auto pivots = r.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<T> v(cols_);
      v[free] = T(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix shapes differ");
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using ComplexMatrix = DenseMatrix<GaussianRational>;

// Entrywise conjugate transpose.
inline ComplexMatrix conjugate_transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conj();
  return out;
}

}  // namespace superspace
