#include "superspace/random.hpp"

#include <bit>

#include "superspace/errors.hpp"

namespace superspace {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Sampler::rational(long bound) {
  Rational r(integer(-2 * bound, 2 * bound), 2);
  r.canonicalize();
  return r;
}

GaussianRational Sampler::gaussian(long bound) { return {rational(bound), rational(bound)}; }

GaussianRational Sampler::nonzero_gaussian(long bound) {
  for (;;) {
    GaussianRational z = gaussian(bound);
    if (!z.is_zero()) return z;
  }
}

Mask Sampler::monomial_mask(const AlgebraPtr& algebra, Parity parity) {
  const unsigned q = algebra->size();
  if (q == 0 || (parity == Parity::even && q < 2)) return 0;
  for (;;) {
    Mask m = static_cast<Mask>(integer(1, static_cast<long>(algebra->full_mask())));
    if ((std::popcount(m) % 2 == 1) == (parity == Parity::odd)) return m;
  }
}

SuperNumber Sampler::even(const AlgebraPtr& algebra, int soul_terms) {
  SuperNumber x(algebra, gaussian());
  for (int k = 0; k < soul_terms; ++k) {
    Mask m = monomial_mask(algebra, Parity::even);
    if (m != 0) x += SuperNumber::monomial(algebra, m, gaussian());
  }
  return x;
}

SuperNumber Sampler::odd(const AlgebraPtr& algebra, int terms) {
  SuperNumber x(algebra);
  for (int k = 0; k < terms; ++k) {
    Mask m = monomial_mask(algebra, Parity::odd);
    if (m != 0) x += SuperNumber::monomial(algebra, m, gaussian());
  }
  return x;
}

SuperNumber Sampler::invertible_even(const AlgebraPtr& algebra, int soul_terms) {
  SuperNumber x = even(algebra, soul_terms);
  return x.soul() + SuperNumber(algebra, nonzero_gaussian());
}

SuperNumber Sampler::any(const AlgebraPtr& algebra, int terms) {
  SuperNumber x(algebra, gaussian());
  for (int k = 0; k < terms; ++k) {
    Mask m = algebra->size() == 0 ? 0 : static_cast<Mask>(integer(0, static_cast<long>(algebra->full_mask())));
    x += SuperNumber::monomial(algebra, m, gaussian());
  }
  return x;
}

LambdaMatrix Sampler::matrix(const AlgebraPtr& algebra, std::size_t rows, std::size_t cols, Parity parity,
                             int terms) {
  LambdaMatrix m(algebra, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parity == Parity::odd ? odd(algebra, terms) : even(algebra, terms);
  return m;
}

LambdaMatrix Sampler::invertible_even_matrix(const AlgebraPtr& algebra, std::size_t n, int soul_terms) {
  ComplexMatrix body = invertible_complex(n);
  LambdaMatrix m(algebra, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = even(algebra, soul_terms).soul() + SuperNumber(algebra, body(i, j));
  return m;
}

ComplexMatrix Sampler::complex_matrix(std::size_t rows, std::size_t cols, long bound) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian(bound);
  return m;
}

ComplexMatrix Sampler::invertible_complex(std::size_t n, long bound) {
  for (;;) {
    ComplexMatrix m = complex_matrix(n, n, bound);
    if (!m.determinant().is_zero()) return m;
  }
}

ComplexMatrix Sampler::special_linear(std::size_t n, long bound) {
  ComplexMatrix m = invertible_complex(n, bound);
  GaussianRational inv = m.determinant().inverse();
  for (std::size_t j = 0; j < n; ++j) m(0, j) *= inv;
  return m;
}

ComplexMatrix Sampler::hermitian(std::size_t n, long bound) {
  ComplexMatrix m = complex_matrix(n, n, bound);
  return m + conjugate_transpose(m);
}

ComplexMatrix Sampler::skew_hermitian(std::size_t n, long bound) {
  ComplexMatrix m = complex_matrix(n, n, bound);
  return m - conjugate_transpose(m);
}

SuperMatrix Sampler::even_supermatrix(const AlgebraPtr& algebra, BlockShape shape, int terms) {
  LambdaMatrix e(algebra, shape.dim(), shape.dim());
  for (std::size_t i = 0; i < shape.dim(); ++i)
    for (std::size_t j = 0; j < shape.dim(); ++j)
      e(i, j) = shape.is_odd_index(i) != shape.is_odd_index(j) ? odd(algebra, terms) : even(algebra, terms);
  return SuperMatrix(std::move(e), shape, MatrixParity::even);
}

SuperMatrix Sampler::invertible_supermatrix(const AlgebraPtr& algebra, BlockShape shape, int terms) {
  LambdaMatrix e = even_supermatrix(algebra, shape, terms).entries();
  if (shape.m) e.set_block(0, 0, invertible_even_matrix(algebra, shape.m, terms));
  if (shape.n) e.set_block(shape.m, shape.m, invertible_even_matrix(algebra, shape.n, terms));
  return SuperMatrix(std::move(e), shape, MatrixParity::even);
}

SuperMatrix Sampler::special_supermatrix(const AlgebraPtr& algebra, BlockShape shape, int terms) {
  SuperMatrix g = invertible_supermatrix(algebra, shape, terms);
  if (shape.n == 0) {
    LambdaMatrix e = g.entries();
    SuperNumber inv = sm_berezinian(g).inverse();
    for (std::size_t j = 0; j < shape.dim(); ++j) e(0, j) = inv * e(0, j);
    return SuperMatrix(std::move(e), shape, MatrixParity::even);
  }
  // Ber(g diag(1, .., 1, b)) = Ber(g) / b.
  SuperNumber b = sm_berezinian(g);
  LambdaMatrix e = g.entries();
  const std::size_t last = shape.dim() - 1;
  for (std::size_t i = 0; i < shape.dim(); ++i) e(i, last) = e(i, last) * b;
  return SuperMatrix(std::move(e), shape, MatrixParity::even);
}

AlgebraElement Sampler::gl_element(long bound) { return AlgebraElement(complex_matrix(kConformalDim, kConformalDim, bound)); }

AlgebraElement Sampler::sl_element(long bound) {
  ComplexMatrix m = complex_matrix(kConformalDim, kConformalDim, bound);
  AlgebraElement x(m);
  m(4, 4) += x.supertrace();
  return AlgebraElement(std::move(m));
}

AlgebraElement Sampler::homogeneous_basis_element(Parity* parity) {
  std::size_t i = static_cast<std::size_t>(integer(1, kConformalDim));
  std::size_t j = static_cast<std::size_t>(integer(1, kConformalDim));
  if (parity) *parity = AlgebraElement::is_odd_position(i - 1, j - 1) ? Parity::odd : Parity::even;
  return AlgebraElement::elementary(i, j);
}

BigCellPoint Sampler::big_cell_point(const AlgebraPtr& algebra, int terms) {
  return {matrix(algebra, 2, 2, Parity::even, terms), matrix(algebra, 1, 2, Parity::odd, terms),
          matrix(algebra, 2, 1, Parity::odd, terms)};
}

SuperPoincareElement Sampler::super_poincare(const AlgebraPtr& algebra, int terms) {
  return {invertible_even_matrix(algebra, 2, terms), invertible_even_matrix(algebra, 2, terms),
          matrix(algebra, 2, 2, Parity::even, terms),  matrix(algebra, 2, 1, Parity::odd, terms),
          matrix(algebra, 1, 2, Parity::odd, terms),   invertible_even(algebra, terms)};
}

Plane Sampler::plane(long bound) {
  for (;;) {
    ComplexMatrix m(4, 2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = GaussianRational(integer(-bound, bound));
    if (m.rank() == 2) return Plane(std::move(m));
  }
}

}  // namespace superspace
