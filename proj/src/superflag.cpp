#include "superspace/superflag.hpp"

#include "superspace/errors.hpp"

namespace superspace {

namespace {

constexpr std::size_t N = kConformalDim;

bool has_shape(const LambdaMatrix& m, std::size_t rows, std::size_t cols) {
  return m.rows() == rows && m.cols() == cols;
}

void require_shape(const LambdaMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (!has_shape(m, rows, cols))
    throw ShapeMismatch(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
}

void require_parity(const LambdaMatrix& m, Parity p, const char* what) {
  if (!m.entries_have_parity(p)) throw ParityError(std::string(what) + " must have " + to_string(p) + " entries");
}

ComplexMatrix body_matrix(const LambdaMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).body();
  return out;
}

LambdaMatrix inverse_or(const LambdaMatrix& m, const char* what) {
  try {
    return m.inverse();
  } catch (const NotInvertible&) {
    throw NotInBigCell(what);
  }
}

}  // namespace

BigCellPoint BigCellPoint::origin(const AlgebraPtr& algebra) {
  return {LambdaMatrix(algebra, 2, 2), LambdaMatrix(algebra, 1, 2), LambdaMatrix(algebra, 2, 1)};
}

bool BigCellPoint::well_formed() const {
  return has_shape(a, 2, 2) && has_shape(alpha, 1, 2) && has_shape(beta, 2, 1) &&
         a.entries_have_parity(Parity::even) && alpha.entries_have_parity(Parity::odd) &&
         beta.entries_have_parity(Parity::odd);
}

void BigCellPoint::validate() const {
  require_shape(a, 2, 2, "A");
  require_shape(alpha, 1, 2, "alpha");
  require_shape(beta, 2, 1, "beta");
  require_parity(a, Parity::even, "A");
  require_parity(alpha, Parity::odd, "alpha");
  require_parity(beta, Parity::odd, "beta");
}

SuperMatrix BigCellPoint::unipotent() const {
  LambdaMatrix u = LambdaMatrix::identity(algebra(), N);
  u.set_block(2, 0, a);
  u.set_block(2, 4, beta);
  u.set_block(4, 0, alpha);
  return SuperMatrix(std::move(u), kConformalShape, well_formed() ? MatrixParity::even : MatrixParity::inhomogeneous);
}

SuperPoincareElement SuperPoincareElement::identity(const AlgebraPtr& algebra) {
  return {LambdaMatrix::identity(algebra, 2), LambdaMatrix::identity(algebra, 2), LambdaMatrix(algebra, 2, 2),
          LambdaMatrix(algebra, 2, 1),        LambdaMatrix(algebra, 1, 2),        SuperNumber(algebra, 1)};
}

SuperPoincareElement SuperPoincareElement::from_matrix(const SuperMatrix& g) {
  if (!(g.shape() == kConformalShape)) throw ShapeMismatch("super Poincare elements are 4|1 supermatrices");
  const LambdaMatrix& e = g.entries();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < N; ++j)
      if (!e(i, j).is_zero()) throw PatternViolation("super Poincare elements vanish in rows 1-2, columns 3-5");
  for (std::size_t j = 2; j < 4; ++j)
    if (!e(4, j).is_zero()) throw PatternViolation("super Poincare elements vanish in row 5, columns 3-4");
  LambdaMatrix l = e.block(0, 0, 2, 2);
  LambdaMatrix r = e.block(2, 2, 2, 2);
  SuperNumber d = e(4, 4);
  LambdaMatrix n = e.block(2, 0, 2, 2) * l.inverse();
  LambdaMatrix chi = r.inverse() * e.block(2, 4, 2, 1);
  LambdaMatrix varphi = d.inverse() * e.block(4, 0, 1, 2);
  return {std::move(l), std::move(r), std::move(n), std::move(chi), std::move(varphi), std::move(d)};
}

void SuperPoincareElement::validate() const {
  require_shape(l, 2, 2, "L");
  require_shape(r, 2, 2, "R");
  require_shape(n, 2, 2, "N");
  require_shape(chi, 2, 1, "chi");
  require_shape(varphi, 1, 2, "varphi");
  require_parity(l, Parity::even, "L");
  require_parity(r, Parity::even, "R");
  require_parity(n, Parity::even, "N");
  require_parity(chi, Parity::odd, "chi");
  require_parity(varphi, Parity::odd, "varphi");
  if (d.parity() == Parity::odd || d.parity() == Parity::mixed) throw ParityError("d must be even");
  if (body_matrix(l).determinant().is_zero()) throw NotInvertible("L");
  if (body_matrix(r).determinant().is_zero()) throw NotInvertible("R");
  if (d.body().is_zero()) throw NotInvertible("d");
}

SuperMatrix SuperPoincareElement::matrix() const {
  LambdaMatrix g(algebra(), N, N);
  g.set_block(0, 0, l);
  g.set_block(2, 0, n * l);
  g.set_block(2, 2, r);
  g.set_block(2, 4, r * chi);
  g.set_block(4, 0, d * varphi);
  g(4, 4) = d;
  return SuperMatrix(std::move(g), kConformalShape, MatrixParity::even);
}

bool twistor_check(const FlagChartPair& p) { return (p.a_g1 - p.b - p.beta2 * p.alpha_g1).is_zero(); }

BigCellPoint pi_chart(const SuperMatrix& g) {
  if (!(g.shape() == kConformalShape)) throw ShapeMismatch("pi is defined on 4|1 supermatrices");
  const LambdaMatrix& e = g.entries();
  LambdaMatrix z = e.block(0, 0, 2, 2);
  LambdaMatrix w = e.block(2, 0, 2, 2);
  LambdaMatrix rho1 = e.block(4, 0, 1, 2);
  LambdaMatrix tau1 = e.block(0, 4, 2, 1);
  LambdaMatrix tau2 = e.block(2, 4, 2, 1);
  LambdaMatrix z_inv = inverse_or(z, "Z has a singular body");
  LambdaMatrix a = w * z_inv;
  SuperNumber s = e(4, 4) - (rho1 * z_inv * tau1)(0, 0);
  if (s.body().is_zero()) throw NotInBigCell("the 2|1 minor has a singular body");
  return {a, rho1 * z_inv, (tau2 - a * tau1) * s.inverse()};
}

FlagChartPair flag_charts(const SuperMatrix& g) {
  BigCellPoint p = pi_chart(g);
  const LambdaMatrix& e = g.entries();
  const std::size_t idx[3] = {0, 1, 4};
  LambdaMatrix minor(g.algebra(), 3, 3);
  LambdaMatrix rest(g.algebra(), 2, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) minor(i, j) = e(idx[i], idx[j]);
    for (std::size_t i = 0; i < 2; ++i) rest(i, j) = e(2 + i, idx[j]);
  }
  LambdaMatrix chart = rest * inverse_or(minor, "the 2|1 minor has a singular body");
  return {p.a, p.alpha, chart.block(0, 0, 2, 2), chart.block(0, 2, 2, 1)};
}

BigCellPoint superpoincare_act(const SuperPoincareElement& p, const BigCellPoint& pt) {
  LambdaMatrix l_inv = p.l.inverse();
  SuperNumber d_inv = p.d.inverse();
  return {p.r * (pt.a + p.chi * pt.alpha) * l_inv + p.n, p.d * ((pt.alpha + p.varphi) * l_inv),
          d_inv * (p.r * (pt.beta + p.chi))};
}

bool act_homomorphism_check(const SuperPoincareElement& p1, const SuperPoincareElement& p2, const BigCellPoint& pt) {
  SuperPoincareElement product = SuperPoincareElement::from_matrix(sm_mul(p1.matrix(), p2.matrix()));
  return superpoincare_act(p1, superpoincare_act(p2, pt)) == superpoincare_act(product, pt);
}

bool stabilizer_membership(const SuperMatrix& g) {
  if (!(g.shape() == kConformalShape)) return false;
  const LambdaMatrix& e = g.entries();
  return e.block(2, 0, 2, 2).is_zero() && e.block(4, 0, 1, 2).is_zero() && e.block(2, 4, 2, 1).is_zero();
}

BigCellPoint xi_bigcell(const BigCellPoint& pt, const ConjugationConfig& cfg) {
  return pi_chart(xi_group(pt.unipotent(), cfg));
}

RealCoordinates real_coordinates(const BigCellPoint& pt, const ConjugationConfig& cfg) {
  const GaussianRational half_j = cfg.j() * GaussianRational(Rational(1, 2));
  return {pt.a + half_j * (pt.alpha.dagger() * pt.alpha), pt.alpha};
}

BigCellPoint from_real_coordinates(const RealCoordinates& rc, const ConjugationConfig& cfg) {
  const GaussianRational half_j = cfg.j() * GaussianRational(Rational(1, 2));
  return {rc.a_prime - half_j * (rc.alpha.dagger() * rc.alpha), rc.alpha, (-cfg.j()) * rc.alpha.dagger()};
}

bool is_real_point(const BigCellPoint& pt, const ConjugationConfig& cfg) {
  RealCoordinates rc = real_coordinates(pt, cfg);
  return rc.a_prime == -rc.a_prime.dagger() && pt.beta == (-cfg.j()) * pt.alpha.dagger();
}

InvarianceReport big_cell_invariance_check(const SuperMatrix& g) {
  if (!(g.shape() == kConformalShape)) throw ShapeMismatch("the big cell lives in a 4|1 flag");
  const LambdaMatrix& e = g.entries();
  const AlgebraPtr& alg = g.algebra();
  ComplexMatrix g11 = body_matrix(e.block(0, 0, 2, 2));
  ComplexMatrix g12 = body_matrix(e.block(0, 2, 2, 2));
  BigCellPoint witness = BigCellPoint::origin(alg);
  if (g11.determinant().is_zero() || e(4, 4).body().is_zero()) return {false, witness};
  if (g12.is_zero_matrix()) return {true, std::nullopt};
  // Find A with det(g11 + g12 A) = 0: with N = g11^{-1} g12, w a column
  // where N w != 0 and c^T N w = 1, A = -w c^T kills N w.
  ComplexMatrix nm = g11.inverse() * g12;
  std::size_t k = 0;
  while (nm(0, k).is_zero() && nm(1, k).is_zero()) ++k;
  std::size_t m = nm(0, k).is_zero() ? 1 : 0;
  GaussianRational c = nm(m, k).inverse();
  witness.a(k, m) = SuperNumber(alg, -c);
  return {false, witness};
}

InvarianceReport big_cell_invariance_check(const SuperPoincareElement& p) {
  return big_cell_invariance_check(p.matrix());
}

std::array<GaussianRational, 8> pi_differential(const AlgebraElement& x) {
  BigCellPoint p = pi_chart(first_order_element(x));
  const Mask eps = kEpsilonMask;
  return {p.a(0, 0).coefficient(eps),     p.a(0, 1).coefficient(eps),    p.a(1, 0).coefficient(eps),
          p.a(1, 1).coefficient(eps),     p.alpha(0, 0).coefficient(eps), p.alpha(0, 1).coefficient(eps),
          p.beta(0, 0).coefficient(eps), p.beta(1, 0).coefficient(eps)};
}

}  // namespace superspace
