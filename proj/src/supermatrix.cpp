#include "superspace/supermatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "superspace/dense_matrix.hpp"
#include "superspace/errors.hpp"

namespace superspace {

LambdaMatrix::LambdaMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols), data_(rows * cols, SuperNumber(algebra_)) {}

LambdaMatrix::LambdaMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols, std::vector<SuperNumber> row_major)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows_ * cols_) throw ShapeMismatch("entry count does not match the matrix shape");
  for (const auto& e : data_)
    if (!same_algebra(e.algebra(), algebra_)) throw AlgebraMismatch();
}

LambdaMatrix LambdaMatrix::identity(AlgebraPtr algebra, std::size_t n) {
  return scalar(algebra, n, SuperNumber(algebra, 1));
}

LambdaMatrix LambdaMatrix::scalar(AlgebraPtr algebra, std::size_t n, const SuperNumber& s) {
  LambdaMatrix out(std::move(algebra), n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = s;
  return out;
}

LambdaMatrix LambdaMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw ShapeMismatch("block outside the matrix");
  LambdaMatrix out(algebra_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void LambdaMatrix::set_block(std::size_t r0, std::size_t c0, const LambdaMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block outside the matrix");
  if (!same_algebra(algebra_, b.algebra_)) throw AlgebraMismatch();
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool LambdaMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SuperNumber& x) { return x.is_zero(); });
}

bool LambdaMatrix::is_scalar() const {
  return std::all_of(data_.begin(), data_.end(), [](const SuperNumber& x) { return x.is_scalar(); });
}

bool LambdaMatrix::entries_have_parity(Parity p) const {
  return std::all_of(data_.begin(), data_.end(), [p](const SuperNumber& x) { return x.is_zero() || x.parity() == p; });
}

LambdaMatrix LambdaMatrix::dagger() const {
  LambdaMatrix out(algebra_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).bar();
  return out;
}

LambdaMatrix LambdaMatrix::transpose() const {
  LambdaMatrix out(algebra_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

LambdaMatrix LambdaMatrix::bar() const {
  LambdaMatrix out = *this;
  for (auto& e : out.data_) e = e.bar();
  return out;
}

SuperNumber LambdaMatrix::determinant() const {
  if (rows_ != cols_) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return SuperNumber(algebra_, 1);
  if (n > 20) throw ShapeMismatch("determinant size too large");
  // Expansion along the top row with minors memoized by column subset.
  // Factors stay in row order, so the result matches the Leibniz sum.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<SuperNumber> minor(full + 1, SuperNumber(algebra_));
  minor[0] = SuperNumber(algebra_, 1);
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    for (std::size_t set = 1; set <= full; ++set) {
      if (static_cast<std::size_t>(std::popcount(set)) != size) continue;
      SuperNumber acc(algebra_);
      std::size_t before = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(set & (std::size_t{1} << c))) continue;
        const SuperNumber& rest = minor[set & ~(std::size_t{1} << c)];
        if (!rest.is_zero() && !(*this)(row, c).is_zero()) {
          SuperNumber t = (*this)(row, c) * rest;
          if (before & 1U)
            acc -= t;
          else
            acc += t;
        }
        ++before;
      }
      minor[set] = std::move(acc);
    }
  }
  return minor[full];
}

LambdaMatrix LambdaMatrix::inverse() const {
  if (rows_ != cols_) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  LambdaMatrix a = *this;
  LambdaMatrix inv = identity(algebra_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).body().is_zero()) ++piv;
    if (piv == n) throw NotInvertible("matrix body is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    // Row operations act by left multiplication, so the result is E*A = I.
    SuperNumber pinv = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = pinv * a(col, j);
      inv(col, j) = pinv * inv(col, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      SuperNumber f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SuperNumber LambdaMatrix::trace() const {
  if (rows_ != cols_) throw ShapeMismatch("trace of a non-square matrix");
  SuperNumber t(algebra_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

LambdaMatrix LambdaMatrix::embed(AlgebraPtr larger) const {
  LambdaMatrix out(larger, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].embed(larger);
  return out;
}

LambdaMatrix LambdaMatrix::operator-() const {
  LambdaMatrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix shapes differ in sum");
  LambdaMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

LambdaMatrix operator-(const LambdaMatrix& a, const LambdaMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix shapes differ in difference");
  LambdaMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("inner dimensions differ in product");
  if (!same_algebra(a.algebra_, b.algebra_)) throw AlgebraMismatch();
  LambdaMatrix out(a.algebra_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const SuperNumber& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const SuperNumber& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

LambdaMatrix operator*(const SuperNumber& s, const LambdaMatrix& a) {
  LambdaMatrix out = a;
  for (auto& e : out.data_) e = s * e;
  return out;
}

LambdaMatrix operator*(const LambdaMatrix& a, const SuperNumber& s) {
  LambdaMatrix out = a;
  for (auto& e : out.data_) e = e * s;
  return out;
}

LambdaMatrix operator*(const GaussianRational& c, const LambdaMatrix& a) {
  LambdaMatrix out = a;
  for (auto& e : out.data_) e *= c;
  return out;
}

bool operator==(const LambdaMatrix& a, const LambdaMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const LambdaMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

// ---------------------------------------------------------------------------

std::string to_string(MatrixParity p) {
  switch (p) {
    case MatrixParity::even: return "even";
    case MatrixParity::odd: return "odd";
    case MatrixParity::inhomogeneous: return "inhomogeneous";
  }
  return "?";
}

MatrixParity parse_matrix_parity(const std::string& s) {
  if (s == "even") return MatrixParity::even;
  if (s == "odd") return MatrixParity::odd;
  if (s == "inhomogeneous") return MatrixParity::inhomogeneous;
  throw std::invalid_argument("unknown matrix parity '" + s + "'");
}

SuperMatrix::SuperMatrix(LambdaMatrix entries, BlockShape shape, MatrixParity parity)
    : entries_(std::move(entries)), shape_(shape), parity_(parity) {
  if (shape_.dim() == 0) throw ShapeMismatch("block shape must have m + n >= 1");
  if (entries_.rows() != shape_.dim() || entries_.cols() != shape_.dim())
    throw ShapeMismatch("entries do not match the block shape");
  if (!has_layout(parity_))
    throw ParityError("entries do not follow the declared " + to_string(parity_) + " layout");
}

SuperMatrix SuperMatrix::identity(AlgebraPtr algebra, BlockShape shape) {
  return SuperMatrix(LambdaMatrix::identity(std::move(algebra), shape.dim()), shape, MatrixParity::even);
}

SuperMatrix SuperMatrix::zero(AlgebraPtr algebra, BlockShape shape, MatrixParity parity) {
  return SuperMatrix(LambdaMatrix(std::move(algebra), shape.dim(), shape.dim()), shape, parity);
}

SuperMatrix SuperMatrix::from_blocks(BlockShape shape, const LambdaMatrix& p, const LambdaMatrix& q,
                                     const LambdaMatrix& r, const LambdaMatrix& s, MatrixParity parity) {
  LambdaMatrix e(p.algebra(), shape.dim(), shape.dim());
  e.set_block(0, 0, p);
  e.set_block(0, shape.m, q);
  e.set_block(shape.m, 0, r);
  e.set_block(shape.m, shape.m, s);
  return SuperMatrix(std::move(e), shape, parity);
}

bool SuperMatrix::has_layout(MatrixParity p) const {
  if (p == MatrixParity::inhomogeneous) return true;
  for (std::size_t i = 0; i < shape_.dim(); ++i)
    for (std::size_t j = 0; j < shape_.dim(); ++j) {
      const SuperNumber& e = entries_(i, j);
      if (e.is_zero()) continue;
      bool diagonal_block = shape_.is_odd_index(i) == shape_.is_odd_index(j);
      Parity want = (diagonal_block == (p == MatrixParity::even)) ? Parity::even : Parity::odd;
      if (e.parity() != want) return false;
    }
  return true;
}

MatrixParity product_parity(MatrixParity a, MatrixParity b) {
  if (a == MatrixParity::inhomogeneous || b == MatrixParity::inhomogeneous) return MatrixParity::inhomogeneous;
  return a == b ? MatrixParity::even : MatrixParity::odd;
}

namespace {

void require_same_shape(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.shape() == b.shape())) throw ShapeMismatch("supermatrix block shapes differ");
}

MatrixParity sum_parity(MatrixParity a, MatrixParity b) { return a == b ? a : MatrixParity::inhomogeneous; }

}  // namespace

SuperMatrix sm_mul(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_shape(a, b);
  return SuperMatrix(a.entries() * b.entries(), a.shape(), product_parity(a.parity(), b.parity()));
}

SuperMatrix sm_add(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_shape(a, b);
  return SuperMatrix(a.entries() + b.entries(), a.shape(), sum_parity(a.parity(), b.parity()));
}

SuperMatrix sm_sub(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_shape(a, b);
  return SuperMatrix(a.entries() - b.entries(), a.shape(), sum_parity(a.parity(), b.parity()));
}

SuperNumber sm_supertrace(const SuperMatrix& a) {
  if (a.parity() != MatrixParity::even) throw ParityError("supertrace needs an even supermatrix");
  return a.p_block().trace() - a.s_block().trace();
}

namespace {

void require_even(const SuperMatrix& a, const char* what) {
  if (a.parity() != MatrixParity::even) throw ParityError(std::string(what) + " needs an even supermatrix");
}

void require_body_invertible(const LambdaMatrix& m, const char* block) {
  ComplexMatrix body(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) body(i, j) = m(i, j).body();
  if (body.determinant().is_zero())
    throw NotInvertible(std::string("diagonal block ") + block + " has a singular body");
}

LambdaMatrix checked_inverse(const LambdaMatrix& m, const char* block) {
  try {
    return m.inverse();
  } catch (const NotInvertible&) {
    throw NotInvertible(std::string("diagonal block ") + block + " has a singular body");
  }
}

}  // namespace

SuperNumber sm_berezinian(const SuperMatrix& a) {
  require_even(a, "Berezinian");
  LambdaMatrix p = a.p_block();
  if (a.shape().n == 0) return p.determinant();
  LambdaMatrix s = a.s_block();
  if (a.shape().m > 0) require_body_invertible(p, "p");
  LambdaMatrix s_inv = checked_inverse(s, "s");
  SuperNumber det_s = s.determinant();
  if (a.shape().m == 0) return det_s.inverse();
  LambdaMatrix schur = p - a.q_block() * s_inv * a.r_block();
  return schur.determinant() * det_s.inverse();
}

SuperNumber berezinian_unnormalized_variant(const SuperMatrix& a) {
  require_even(a, "Berezinian");
  LambdaMatrix p = a.p_block();
  LambdaMatrix s = a.s_block();
  if (a.shape().n == 0) return p.determinant();
  LambdaMatrix s_inv = checked_inverse(s, "s");
  if (a.shape().m == 0) return s_inv.determinant();
  return s_inv.determinant() * (p - a.q_block() * s * a.r_block()).determinant();
}

SuperMatrix sm_inverse(const SuperMatrix& a) {
  const BlockShape sh = a.shape();
  if (sh.m == 0 || sh.n == 0) {
    LambdaMatrix whole = a.entries().inverse();
    MatrixParity parity = a.parity() == MatrixParity::even ? MatrixParity::even : MatrixParity::inhomogeneous;
    return SuperMatrix(std::move(whole), sh, parity);
  }
  LambdaMatrix p = a.p_block();
  LambdaMatrix q = a.q_block();
  LambdaMatrix r = a.r_block();
  LambdaMatrix s = a.s_block();
  LambdaMatrix p_inv = checked_inverse(p, "p");
  LambdaMatrix schur = s - r * p_inv * q;
  LambdaMatrix schur_inv = checked_inverse(schur, "s - r p^{-1} q");
  LambdaMatrix pq = p_inv * q;
  LambdaMatrix rp = r * p_inv;
  LambdaMatrix top_left = p_inv + pq * schur_inv * rp;
  LambdaMatrix top_right = -(pq * schur_inv);
  LambdaMatrix bottom_left = -(schur_inv * rp);
  MatrixParity parity = a.parity() == MatrixParity::even ? MatrixParity::even : MatrixParity::inhomogeneous;
  return SuperMatrix::from_blocks(sh, top_left, top_right, bottom_left, schur_inv, parity);
}

SuperMatrix sm_dagger(const SuperMatrix& a) { return SuperMatrix(a.entries().dagger(), a.shape(), a.parity()); }

}  // namespace superspace
