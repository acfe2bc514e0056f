#pragma once

// Planes in C^4, the Pluecker embedding into P^5 and the Klein quadric.
//
// Pluecker coordinates are always ordered (y12, y23, y31, y14, y24, y34),
// y_ij = a_i b_j - a_j b_i for a plane spanned by columns a, b. The big cell
// y12 != 0 is identified with 2x2 matrices A through the plane (I; A).

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "superspace/dense_matrix.hpp"

namespace superspace {

// A 4x2 basis (columns a, b) of a plane. Throws DegeneratePlane unless the
// rank is 2.
class Plane {
 public:
  explicit Plane(ComplexMatrix basis);

  const ComplexMatrix& basis() const { return basis_; }
  // Equal column spans.
  bool same_plane(const Plane& other) const;

 private:
  ComplexMatrix basis_;
};

struct PluckerPoint {
  static constexpr const char* kLabels[6] = {"y12", "y23", "y31", "y14", "y24", "y34"};
  std::array<GaussianRational, 6> y;

  const GaussianRational& y12() const { return y[0]; }
  const GaussianRational& y23() const { return y[1]; }
  const GaussianRational& y31() const { return y[2]; }
  const GaussianRational& y14() const { return y[3]; }
  const GaussianRational& y24() const { return y[4]; }
  const GaussianRational& y34() const { return y[5]; }

  bool is_zero() const;
  friend bool operator==(const PluckerPoint&, const PluckerPoint&) = default;
};

// Q(y) = y12 y34 + y23 y14 + y31 y24.
GaussianRational klein_form(const PluckerPoint& p);
// y23 y14 + y31 y24.
GaussianRational cone_residual(const PluckerPoint& p);

// y = lambda y' for some nonzero lambda; false when either point is zero.
bool projectively_equal(const PluckerPoint& a, const PluckerPoint& b);

PluckerPoint plucker(const Plane& plane);

// Antisymmetric 4x4 matrix Y with Y_ij = y_ij, and back.
ComplexMatrix wedge_matrix(const PluckerPoint& p);
PluckerPoint from_wedge_matrix(const ComplexMatrix& y);

// A = [[-y23, -y31], [-y24, y14]] after scaling to y12 = 1. Throws
// NotInBigCell when y12 = 0.
ComplexMatrix chart_to_cell(const PluckerPoint& p);
// The plane (I; A).
Plane cell_to_plane(const ComplexMatrix& a);

enum class ConeRegion { big_cell, affine_cone, projective_quadric };

std::string to_string(ConeRegion r);

// Throws InvalidPoint when the Klein relation fails or p is zero.
ConeRegion cone_membership(const PluckerPoint& p);

// Complex Poincare group element [[L, 0], [N L, R]].
struct PoincareParams {
  ComplexMatrix l;
  ComplexMatrix r;
  ComplexMatrix n;

  static PoincareParams identity();
  ComplexMatrix matrix() const;
};

// Parameters of "first, then second".
PoincareParams compose(const PoincareParams& second, const PoincareParams& first);

// A -> N + R A L^{-1}. Throws NotInvertible when L is singular.
ComplexMatrix poincare_act(const PoincareParams& g, const ComplexMatrix& a);

// y -> g y through the induced action on the second exterior power.
// Throws NotInvertible when g is singular.
PluckerPoint conformal_act_wedge(const ComplexMatrix& g, const PluckerPoint& p);

// Conjugate every coordinate and swap the y31 and y24 slots.
PluckerPoint theta_plucker(const PluckerPoint& p);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Signature of a symmetric rational matrix by exact congruence.
Signature signature(const RationalMatrix& symmetric);

// Gram matrix of Q restricted to the theta-fixed points, in the real
// coordinates (y12, y23, y14, y34, u, v) with y31 = u + iv, y24 = u - iv.
RationalMatrix qr_gram_matrix();
Signature qr_signature();

// The theta-fixed Pluecker point with the given real coordinates.
PluckerPoint real_plucker_point(const std::array<Rational, 6>& coords);

// A -> N + (L^dag)^{-1} A L^{-1}. Throws NotInvertible for singular L and
// NonHermitianTranslation unless N = N^dag.
ComplexMatrix real_poincare_act(const ComplexMatrix& l, const ComplexMatrix& n, const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& m);

}  // namespace superspace
