#include "superspace/geometry.hpp"

#include <stdexcept>

#include "superspace/errors.hpp"

namespace superspace {

namespace {

// (i, j) of each slot in the fixed order, 0-based; note y31 is stored as is.
struct Slot {
  std::size_t i, j;
};
constexpr Slot kSlots[6] = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};

void require_2x2(const ComplexMatrix& m, const char* what) {
  if (m.rows() != 2 || m.cols() != 2) throw ShapeMismatch(std::string(what) + " must be 2x2");
}

}  // namespace

Plane::Plane(ComplexMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != 4 || basis_.cols() != 2) throw ShapeMismatch("a plane basis is a 4x2 matrix");
  if (basis_.rank() != 2) throw DegeneratePlane("basis vectors are linearly dependent");
}

bool Plane::same_plane(const Plane& other) const {
  ComplexMatrix both(4, 4);
  both.set_block(0, 0, basis_);
  both.set_block(0, 2, other.basis_);
  return both.rank() == 2;
}

bool PluckerPoint::is_zero() const {
  for (const auto& c : y)
    if (!c.is_zero()) return false;
  return true;
}

GaussianRational klein_form(const PluckerPoint& p) {
  return p.y12() * p.y34() + p.y23() * p.y14() + p.y31() * p.y24();
}

GaussianRational cone_residual(const PluckerPoint& p) { return p.y23() * p.y14() + p.y31() * p.y24(); }

bool projectively_equal(const PluckerPoint& a, const PluckerPoint& b) {
  if (a.is_zero() || b.is_zero()) return false;
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = s + 1; t < 6; ++t)
      if (!(a.y[s] * b.y[t] - a.y[t] * b.y[s]).is_zero()) return false;
  return true;
}

PluckerPoint plucker(const Plane& plane) {
  const ComplexMatrix& m = plane.basis();
  PluckerPoint p;
  for (std::size_t s = 0; s < 6; ++s) {
    auto [i, j] = kSlots[s];
    p.y[s] = m(i, 0) * m(j, 1) - m(j, 0) * m(i, 1);
  }
  return p;
}

ComplexMatrix wedge_matrix(const PluckerPoint& p) {
  ComplexMatrix y(4, 4);
  for (std::size_t s = 0; s < 6; ++s) {
    auto [i, j] = kSlots[s];
    y(i, j) = p.y[s];
    y(j, i) = -p.y[s];
  }
  return y;
}

PluckerPoint from_wedge_matrix(const ComplexMatrix& y) {
  if (y.rows() != 4 || y.cols() != 4) throw ShapeMismatch("wedge matrices are 4x4");
  PluckerPoint p;
  for (std::size_t s = 0; s < 6; ++s) p.y[s] = y(kSlots[s].i, kSlots[s].j);
  return p;
}

ComplexMatrix chart_to_cell(const PluckerPoint& p) {
  if (p.y12().is_zero()) throw NotInBigCell("y12 = 0");
  GaussianRational s = p.y12().inverse();
  return ComplexMatrix{{-(p.y23() * s), -(p.y31() * s)}, {-(p.y24() * s), p.y14() * s}};
}

Plane cell_to_plane(const ComplexMatrix& a) {
  require_2x2(a, "A");
  ComplexMatrix b(4, 2);
  b.set_block(0, 0, ComplexMatrix::identity(2));
  b.set_block(2, 0, a);
  return Plane(std::move(b));
}

std::string to_string(ConeRegion r) {
  switch (r) {
    case ConeRegion::big_cell: return "big_cell";
    case ConeRegion::affine_cone: return "affine_cone";
    case ConeRegion::projective_quadric: return "projective_quadric";
  }
  return "?";
}

ConeRegion cone_membership(const PluckerPoint& p) {
  if (p.is_zero()) throw InvalidPoint("all Pluecker coordinates vanish");
  if (!klein_form(p).is_zero()) throw InvalidPoint("Klein relation fails");
  if (!p.y12().is_zero()) return ConeRegion::big_cell;
  // With y12 = 0 the Klein relation is exactly the cone equation.
  if (!cone_residual(p).is_zero()) throw std::logic_error("cone equation fails off the big cell");
  return p.y34().is_zero() ? ConeRegion::projective_quadric : ConeRegion::affine_cone;
}

PoincareParams PoincareParams::identity() {
  return {ComplexMatrix::identity(2), ComplexMatrix::identity(2), ComplexMatrix(2, 2)};
}

ComplexMatrix PoincareParams::matrix() const {
  ComplexMatrix g(4, 4);
  g.set_block(0, 0, l);
  g.set_block(2, 0, n * l);
  g.set_block(2, 2, r);
  return g;
}

PoincareParams compose(const PoincareParams& second, const PoincareParams& first) {
  return {second.l * first.l, second.r * first.r, second.n + second.r * first.n * second.l.inverse()};
}

ComplexMatrix poincare_act(const PoincareParams& g, const ComplexMatrix& a) {
  require_2x2(g.l, "L");
  require_2x2(g.r, "R");
  require_2x2(g.n, "N");
  require_2x2(a, "A");
  return g.n + g.r * a * g.l.inverse();
}

PluckerPoint conformal_act_wedge(const ComplexMatrix& g, const PluckerPoint& p) {
  if (g.rows() != 4 || g.cols() != 4) throw ShapeMismatch("g must be 4x4");
  if (g.determinant().is_zero()) throw NotInvertible("g is singular");
  return from_wedge_matrix(g * wedge_matrix(p) * g.transpose());
}

PluckerPoint theta_plucker(const PluckerPoint& p) {
  PluckerPoint out;
  for (std::size_t s = 0; s < 6; ++s) out.y[s] = p.y[s].conj();
  std::swap(out.y[2], out.y[4]);
  return out;
}

Signature signature(const RationalMatrix& symmetric) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw ShapeMismatch("signature needs a square matrix");
  if (!(symmetric == symmetric.transpose())) throw std::invalid_argument("signature needs a symmetric matrix");
  RationalMatrix a = symmetric;
  Signature sig;
  // Symmetric elimination a -> E a E^T. A zero pivot with a nonzero entry in
  // its row is repaired by adding that row/column to it first.
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t m = k + 1;
      while (m < n && is_zero(a(k, m))) ++m;
      if (m < n) {
        Rational c = is_zero(a(m, m) + 2 * a(k, m)) ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < n; ++j) a(k, j) += c * a(m, j);
        for (std::size_t i = 0; i < n; ++i) a(i, k) += c * a(i, m);
      }
    }
    if (is_zero(a(k, k))) {
      ++sig.zero;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, k);
    }
    (sgn(a(k, k)) > 0 ? sig.positive : sig.negative)++;
  }
  return sig;
}

PluckerPoint real_plucker_point(const std::array<Rational, 6>& c) {
  PluckerPoint p;
  p.y[0] = c[0];
  p.y[1] = c[1];
  p.y[3] = c[2];
  p.y[5] = c[3];
  p.y[2] = GaussianRational(c[4], c[5]);
  p.y[4] = GaussianRational(c[4], -c[5]);
  return p;
}

RationalMatrix qr_gram_matrix() {
  auto q = [](const std::array<Rational, 6>& c) {
    GaussianRational v = klein_form(real_plucker_point(c));
    if (!v.is_real()) throw std::logic_error("Q is not real on theta-fixed points");
    return v.re();
  };
  RationalMatrix g(6, 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<Rational, 6> ea{}, eb{}, eab{};
      ea[a] = 1;
      eb[b] = 1;
      eab[a] += 1;
      eab[b] += 1;
      g(a, b) = (q(eab) - q(ea) - q(eb)) / 2;
    }
  return g;
}

Signature qr_signature() { return signature(qr_gram_matrix()); }

bool is_hermitian(const ComplexMatrix& m) { return m == conjugate_transpose(m); }

ComplexMatrix real_poincare_act(const ComplexMatrix& l, const ComplexMatrix& n, const ComplexMatrix& a) {
  require_2x2(l, "L");
  require_2x2(n, "N");
  require_2x2(a, "A");
  if (!is_hermitian(n)) throw NonHermitianTranslation("N != N^dag");
  ComplexMatrix l_inv = l.inverse();
  return n + conjugate_transpose(l_inv) * a * l_inv;
}

}  // namespace superspace
