#include "superspace/realform.hpp"

#include <stdexcept>

#include "superspace/errors.hpp"

namespace superspace {

namespace {

constexpr std::size_t N = kConformalDim;

ComplexMatrix body_matrix(const LambdaMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).body();
  return out;
}

LambdaMatrix lift(const AlgebraPtr& algebra, const ComplexMatrix& m) {
  LambdaMatrix out(algebra, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = SuperNumber(algebra, m(i, j));
  return out;
}

// Complex coordinates of X in sl_basis(): off-diagonal entries, then the
// first four diagonal entries.
std::vector<GaussianRational> sl_coordinates(const AlgebraElement& x) {
  std::vector<GaussianRational> c;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) c.push_back(x(i, j));
  for (std::size_t k = 0; k + 1 < N; ++k) c.push_back(x(k, k));
  return c;
}

}  // namespace

std::string to_string(JSign j) { return j == JSign::plus_i ? "+i" : "-i"; }

JSign parse_j_sign(const std::string& s) {
  if (s == "+i" || s == "i") return JSign::plus_i;
  if (s == "-i") return JSign::minus_i;
  throw std::invalid_argument("j must be +i or -i, got '" + s + "'");
}

GaussianRational ConjugationConfig::j() const {
  return j_sign == JSign::plus_i ? GaussianRational::i() : -GaussianRational::i();
}

ComplexMatrix ConjugationConfig::F() {
  ComplexMatrix f(4, 4);
  f(0, 2) = f(1, 3) = f(2, 0) = f(3, 1) = 1;
  return f;
}

ComplexMatrix ConjugationConfig::L() {
  ComplexMatrix l(N, N);
  l.set_block(0, 0, F());
  l(4, 4) = 1;
  return l;
}

AlgebraElement sigma(const AlgebraElement& x) {
  const ComplexMatrix f = ConjugationConfig::F();
  const GaussianRational i = GaussianRational::i();
  const ComplexMatrix& m = x.matrix();
  ComplexMatrix x4 = m.block(0, 0, 4, 4);
  ComplexMatrix mu = m.block(0, 4, 4, 1);
  ComplexMatrix nu = m.block(4, 0, 1, 4);
  ComplexMatrix out(N, N);
  out.set_block(0, 0, GaussianRational(-1) * (f * conjugate_transpose(x4) * f));
  out.set_block(0, 4, i * (f * conjugate_transpose(nu)));
  out.set_block(4, 0, i * (conjugate_transpose(mu) * f));
  out(4, 4) = -m(4, 4).conj();
  return AlgebraElement(std::move(out));
}

std::vector<AlgebraElement> sigma_fixed_basis() {
  const std::vector<AlgebraElement> basis = sl_basis();
  std::vector<AlgebraElement> out;
  for (Parity parity : {Parity::even, Parity::odd}) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((basis[k].parity() == Parity::odd) == (parity == Parity::odd)) idx.push_back(k);
    // sigma as a real-linear map on the span of idx, coordinates (Re, Im).
    const std::size_t n = idx.size();
    RationalMatrix m(2 * n, 2 * n);
    for (std::size_t col = 0; col < 2 * n; ++col) {
      GaussianRational c = col % 2 == 0 ? GaussianRational(1) : GaussianRational::i();
      std::vector<GaussianRational> image = sl_coordinates(sigma(c * basis[idx[col / 2]]));
      for (std::size_t r = 0; r < n; ++r) {
        m(2 * r, col) = image[idx[r]].re();
        m(2 * r + 1, col) = image[idx[r]].im();
      }
    }
    for (const auto& v : (m - RationalMatrix::identity(2 * n)).nullspace()) {
      AlgebraElement e;
      for (std::size_t r = 0; r < n; ++r) e = e + GaussianRational(v[2 * r], v[2 * r + 1]) * basis[idx[r]];
      out.push_back(std::move(e));
    }
  }
  return out;
}

SuperDimension sigma_fixed_dimension() {
  SuperDimension d;
  for (const auto& b : sigma_fixed_basis()) (b.parity() == Parity::odd ? d.odd : d.even)++;
  return d;
}

SuperMatrix theta_group(const SuperMatrix& g, const ConjugationConfig& cfg) {
  if (!(g.shape() == kConformalShape)) throw ShapeMismatch("theta acts on 4|1 supermatrices");
  if (body_matrix(g.entries()).determinant().is_zero()) throw NotInvertible("theta needs an invertible g");
  const AlgebraPtr& alg = g.algebra();
  const GaussianRational j = cfg.j();
  LambdaMatrix out(alg, N, N);
  out.set_block(0, 0, g.p_block().dagger());
  out.set_block(0, 4, j * g.r_block().dagger());
  out.set_block(4, 0, j * g.q_block().dagger());
  out(4, 4) = g(4, 4).bar();
  return SuperMatrix(std::move(out), g.shape(), g.parity());
}

SuperMatrix xi_group(const SuperMatrix& g, const ConjugationConfig& cfg) {
  SuperMatrix l(lift(g.algebra(), ConjugationConfig::L()), kConformalShape, MatrixParity::even);
  SuperMatrix t_inv = sm_inverse(theta_group(g, cfg));
  return SuperMatrix((l.entries() * t_inv.entries()) * l.entries(), g.shape(), g.parity());
}

AlgebraElement xi_differential(const AlgebraElement& x, const ConjugationConfig& cfg) {
  SuperMatrix h = xi_group(first_order_element(x), cfg);
  ComplexMatrix out(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = h(i, j).coefficient(kEpsilonMask);
  return AlgebraElement(std::move(out));
}

JSign bootstrap_j_sign() {
  for (JSign s : {JSign::plus_i, JSign::minus_i}) {
    ConjugationConfig cfg{s};
    bool agrees = true;
    for (const auto& b : gl_basis()) {
      for (const GaussianRational& c : {GaussianRational(1), GaussianRational::i()})
        if (!(xi_differential(c * b, cfg) == sigma(c * b))) agrees = false;
      if (!agrees) break;
    }
    if (agrees) return s;
  }
  throw std::logic_error("no choice of j makes the differential of xi equal to sigma");
}

PoincareRealityReport reality_conditions_poincare(const SuperMatrix& g, const ConjugationConfig& cfg) {
  if (!(g.shape() == kConformalShape)) throw ShapeMismatch("super Poincare elements are 4|1 supermatrices");
  const LambdaMatrix& e = g.entries();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < N; ++j)
      if (!e(i, j).is_zero()) throw PatternViolation("super Poincare elements vanish in rows 1-2, columns 3-5");
  for (std::size_t j = 2; j < 4; ++j)
    if (!e(4, j).is_zero()) throw PatternViolation("super Poincare elements vanish in row 5, columns 3-4");

  const AlgebraPtr& alg = g.algebra();
  const GaussianRational j = cfg.j();
  LambdaMatrix l = e.block(0, 0, 2, 2);
  LambdaMatrix m = e.block(2, 0, 2, 2);
  LambdaMatrix r = e.block(2, 2, 2, 2);
  SuperNumber d = e(4, 4);
  LambdaMatrix chi = r.inverse() * e.block(2, 4, 2, 1);
  LambdaMatrix phi = d.inverse() * e.block(4, 0, 1, 2);

  LambdaMatrix l_inv = l.inverse();
  LambdaMatrix l_dag_inv = l.dagger().inverse();
  LambdaMatrix ml = m * l_inv;
  LambdaMatrix t = l_dag_inv * phi.dagger() * phi * l_inv;

  PoincareRealityReport rep{.shifted_translation = ml + (j * GaussianRational(Rational(1, 2))) * t};
  rep.l_condition = l == r.dagger().inverse();
  rep.chi_condition = chi == (-j) * phi.dagger();
  rep.m_condition = ml == -ml.dagger() - j * t;
  rep.d_condition = d * d.bar() == SuperNumber(alg, 1);
  rep.shifted_skew_hermitian = rep.shifted_translation == -rep.shifted_translation.dagger();
  rep.fixed_by_xi = xi_group(g, cfg) == g;
  return rep;
}

}  // namespace superspace
