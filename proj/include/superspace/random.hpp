#pragma once

// Seeded random samplers for the property suites. All values have small
// integer or half-integer coefficients and few soul terms, so exact
// arithmetic stays cheap.

#include <cstdint>
#include <random>

#include "superspace/geometry.hpp"
#include "superspace/liesuper.hpp"
#include "superspace/superflag.hpp"
#include "superspace/supermatrix.hpp"

namespace superspace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 0) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }
  // Integers and halves in [-bound, bound].
  Rational rational(long bound = 3);
  GaussianRational gaussian(long bound = 3);
  GaussianRational nonzero_gaussian(long bound = 3);

  // Random monomial of the given parity (mask popcount parity), nonempty.
  Mask monomial_mask(const AlgebraPtr& algebra, Parity parity);
  // Body (for even) plus up to `soul_terms` soul monomials of the parity.
  SuperNumber even(const AlgebraPtr& algebra, int soul_terms = 2);
  SuperNumber odd(const AlgebraPtr& algebra, int terms = 2);
  SuperNumber invertible_even(const AlgebraPtr& algebra, int soul_terms = 2);
  // Arbitrary element with terms of both parities.
  SuperNumber any(const AlgebraPtr& algebra, int terms = 4);

  LambdaMatrix matrix(const AlgebraPtr& algebra, std::size_t rows, std::size_t cols, Parity parity,
                      int terms = 2);
  LambdaMatrix invertible_even_matrix(const AlgebraPtr& algebra, std::size_t n, int soul_terms = 2);

  ComplexMatrix complex_matrix(std::size_t rows, std::size_t cols, long bound = 3);
  ComplexMatrix invertible_complex(std::size_t n, long bound = 3);
  // Determinant 1.
  ComplexMatrix special_linear(std::size_t n, long bound = 3);
  ComplexMatrix hermitian(std::size_t n, long bound = 3);
  ComplexMatrix skew_hermitian(std::size_t n, long bound = 3);

  SuperMatrix even_supermatrix(const AlgebraPtr& algebra, BlockShape shape, int terms = 2);
  // Even, with invertible p and s bodies.
  SuperMatrix invertible_supermatrix(const AlgebraPtr& algebra, BlockShape shape, int terms = 2);
  // Invertible with Berezinian 1.
  SuperMatrix special_supermatrix(const AlgebraPtr& algebra, BlockShape shape, int terms = 2);

  AlgebraElement gl_element(long bound = 3);
  AlgebraElement sl_element(long bound = 3);
  AlgebraElement homogeneous_basis_element(Parity* parity = nullptr);

  BigCellPoint big_cell_point(const AlgebraPtr& algebra, int terms = 2);
  SuperPoincareElement super_poincare(const AlgebraPtr& algebra, int terms = 2);

  // A rank-2 4x2 matrix with integer entries.
  Plane plane(long bound = 5);

 private:
  std::mt19937_64 rng_;
};

}  // namespace superspace
