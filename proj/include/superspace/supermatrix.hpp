#pragma once

// Matrices over a Grassmann algebra, and (m|n) block supermatrices.
//
// Berezinian. For an even supermatrix [[p, q], [r, s]] with invertible p and
// s bodies we compute
//     Ber = det(p - q s^{-1} r) * det(s)^{-1}.
// The literal reading det(s^{-1}) det(p - q s r) is *not* multiplicative;
// it is kept as `berezinian_unnormalized_variant` only so that tests can
// demonstrate the failure.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "superspace/grassmann.hpp"

namespace superspace {

// Rectangular matrix with entries in a Grassmann algebra. Products keep the
// order of factors, so odd entries are handled correctly.
class LambdaMatrix {
 public:
  LambdaMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols);
  LambdaMatrix(AlgebraPtr algebra, std::size_t rows, std::size_t cols, std::vector<SuperNumber> row_major);

  static LambdaMatrix identity(AlgebraPtr algebra, std::size_t n);
  static LambdaMatrix scalar(AlgebraPtr algebra, std::size_t n, const SuperNumber& s);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const SuperNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  SuperNumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<SuperNumber>& entries() const { return data_; }

  LambdaMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const LambdaMatrix& b);

  bool is_zero() const;
  // True when every entry is a plain complex number.
  bool is_scalar() const;
  // Homogeneous with the given parity (zero entries count as both).
  bool entries_have_parity(Parity p) const;

  // Entry (i, j) of the result is bar(entry (j, i)). No sign is attached to
  // odd entries.
  LambdaMatrix dagger() const;
  LambdaMatrix transpose() const;
  LambdaMatrix bar() const;

  // Leibniz expansion; valid when the entries commute (all even).
  SuperNumber determinant() const;
  // Gauss-Jordan elimination with pivots chosen by invertible body. Works for
  // arbitrary (non-commuting) entries; throws NotInvertible when the body
  // matrix is singular.
  LambdaMatrix inverse() const;
  SuperNumber trace() const;

  LambdaMatrix embed(AlgebraPtr larger) const;

  LambdaMatrix operator-() const;
  friend LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b);
  friend LambdaMatrix operator-(const LambdaMatrix& a, const LambdaMatrix& b);
  friend LambdaMatrix operator*(const LambdaMatrix& a, const LambdaMatrix& b);
  friend LambdaMatrix operator*(const SuperNumber& s, const LambdaMatrix& a);
  friend LambdaMatrix operator*(const LambdaMatrix& a, const SuperNumber& s);
  friend LambdaMatrix operator*(const GaussianRational& c, const LambdaMatrix& a);
  friend bool operator==(const LambdaMatrix& a, const LambdaMatrix& b);

 private:
  AlgebraPtr algebra_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SuperNumber> data_;
};

std::ostream& operator<<(std::ostream& os, const LambdaMatrix& m);

struct BlockShape {
  unsigned m = 0;  // even rows/columns
  unsigned n = 0;  // odd rows/columns

  unsigned dim() const { return m + n; }
  bool is_odd_index(std::size_t i) const { return i >= m; }
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

enum class MatrixParity { even, odd, inhomogeneous };

std::string to_string(MatrixParity p);
MatrixParity parse_matrix_parity(const std::string& s);

// Square (m|n) x (m|n) matrix over a Grassmann algebra with a declared parity.
// For declared parity `even`, the diagonal blocks hold even entries and the
// off-diagonal blocks odd ones; `odd` reverses this. `inhomogeneous` is an
// unchecked container.
class SuperMatrix {
 public:
  SuperMatrix(LambdaMatrix entries, BlockShape shape, MatrixParity parity);

  static SuperMatrix identity(AlgebraPtr algebra, BlockShape shape);
  static SuperMatrix zero(AlgebraPtr algebra, BlockShape shape, MatrixParity parity = MatrixParity::even);

  const LambdaMatrix& entries() const { return entries_; }
  const AlgebraPtr& algebra() const { return entries_.algebra(); }
  BlockShape shape() const { return shape_; }
  MatrixParity parity() const { return parity_; }
  const SuperNumber& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  LambdaMatrix p_block() const { return entries_.block(0, 0, shape_.m, shape_.m); }
  LambdaMatrix q_block() const { return entries_.block(0, shape_.m, shape_.m, shape_.n); }
  LambdaMatrix r_block() const { return entries_.block(shape_.m, 0, shape_.n, shape_.m); }
  LambdaMatrix s_block() const { return entries_.block(shape_.m, shape_.m, shape_.n, shape_.n); }

  static SuperMatrix from_blocks(BlockShape shape, const LambdaMatrix& p, const LambdaMatrix& q,
                                 const LambdaMatrix& r, const LambdaMatrix& s, MatrixParity parity);

  // Whether the entries satisfy the layout of the given parity.
  bool has_layout(MatrixParity p) const;
  SuperMatrix with_parity(MatrixParity p) const { return SuperMatrix(entries_, shape_, p); }

  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  LambdaMatrix entries_;
  BlockShape shape_;
  MatrixParity parity_;
};

MatrixParity product_parity(MatrixParity a, MatrixParity b);

SuperMatrix sm_mul(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix sm_add(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix sm_sub(const SuperMatrix& a, const SuperMatrix& b);

// tr(p) - tr(s). Requires declared parity even.
SuperNumber sm_supertrace(const SuperMatrix& a);

// det(p - q s^{-1} r) / det(s). Requires declared parity even and invertible
// p, s bodies.
SuperNumber sm_berezinian(const SuperMatrix& a);

// det(s^{-1}) det(p - q s r): a literal but non-multiplicative formula,
// retained for regression tests.
SuperNumber berezinian_unnormalized_variant(const SuperMatrix& a);

// Two-sided inverse via the Schur complement of the even block:
//   [[p, q], [r, s]]^{-1} = [[p^{-1} + p^{-1} q S^{-1} r p^{-1}, -p^{-1} q S^{-1}],
//                            [-S^{-1} r p^{-1},                   S^{-1}]],
// S = s - r p^{-1} q.
SuperMatrix sm_inverse(const SuperMatrix& a);

SuperMatrix sm_dagger(const SuperMatrix& a);

}  // namespace superspace
