#include <doctest.h>

#include "oracles.hpp"
#include "superspace/errors.hpp"
#include "superspace/random.hpp"
#include "superspace/realform.hpp"
#include "superspace/superflag.hpp"

using namespace superspace;

namespace {

AlgebraElement e(std::size_t i, std::size_t j, GaussianRational c = 1) { return AlgebraElement::elementary(i, j, c); }

const GaussianRational I(0, 1);

// F swaps the index pairs (1,3) and (2,4) and fixes 5.
std::size_t f(std::size_t i) { return i < 4 ? (i + 2) % 4 : i; }

// Entrywise form: sigma(X)_ab = s_ab conj(X_{f(b) f(a)}) with s = -1 on even
// positions and i on odd ones.
AlgebraElement oracle_sigma(const AlgebraElement& x) {
  ComplexMatrix m(5, 5);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      GaussianRational s = AlgebraElement::is_odd_position(a, b) ? I : GaussianRational(-1);
      m(a, b) = s * x(f(b), f(a)).conj();
    }
  return AlgebraElement(m);
}

// Transpose with bar, and a factor j on the odd positions.
SuperMatrix oracle_theta(const SuperMatrix& g, GaussianRational j) {
  LambdaMatrix out(g.algebra(), 5, 5);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      SuperNumber v = g.entries()(b, a).bar();
      out(a, b) = AlgebraElement::is_odd_position(a, b) ? j * v : v;
    }
  return SuperMatrix(out, kConformalShape, MatrixParity::inhomogeneous);
}

SuperMatrix big_l(const AlgebraPtr& a) {
  LambdaMatrix m(a, 5, 5);
  for (std::size_t i = 0; i < 5; ++i) m(i, f(i)) = SuperNumber(a, 1);
  return SuperMatrix(m, kConformalShape, MatrixParity::even);
}

// Rank over Q of the real-linear map X -> sigma(X) - X restricted to the
// given complex basis, written on real coordinates.
std::size_t fixed_real_dimension(const std::vector<AlgebraElement>& basis) {
  std::vector<AlgebraElement> real_basis;
  for (const auto& b : basis) {
    real_basis.push_back(b);
    real_basis.push_back(I * b);
  }
  const std::size_t n = real_basis.size();
  ComplexMatrix m(50, n);
  for (std::size_t k = 0; k < n; ++k) {
    AlgebraElement d = oracle_sigma(real_basis[k]) - real_basis[k];
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) {
        m(2 * (5 * a + b), k) = d(a, b).re();
        m(2 * (5 * a + b) + 1, k) = d(a, b).im();
      }
  }
  return n - m.rank();
}

ComplexMatrix block(const AlgebraElement& x, std::size_t r, std::size_t c, std::size_t h, std::size_t w) {
  return x.matrix().block(r, c, h, w);
}

}  // namespace

TEST_CASE("sigma matches the entrywise formula on every basis element") {
  for (const auto& x : gl_basis())
    for (GaussianRational c : {GaussianRational(1), I, GaussianRational(1, 1)}) CHECK(sigma(c * x) == oracle_sigma(c * x));
}

TEST_CASE("sigma is an antilinear involution") {
  auto basis = gl_basis();
  for (const auto& x : basis)
    for (GaussianRational c : {GaussianRational(1), I, GaussianRational(1, 1)}) {
      CHECK(sigma(c * x) == c.conj() * sigma(x));
      CHECK(sigma(sigma(c * x)) == c * x);
    }
  Sampler rng(1);
  for (int k = 0; k < 20; ++k) {
    AlgebraElement x = rng.gl_element();
    AlgebraElement y = rng.gl_element();
    CHECK(sigma(x + y) == sigma(x) + sigma(y));
  }
}

TEST_CASE("sigma preserves the bracket and the grading") {
  auto basis = gl_basis();
  for (const auto& x : basis) {
    CHECK(sigma(x).parity() == x.parity());
    for (const auto& y : basis) CHECK(sigma(bracket(x, y)) == bracket(sigma(x), sigma(y)));
  }
}

TEST_CASE("sigma leaves p and n invariant") {
  for (PatternName name : {PatternName::p, PatternName::n, PatternName::n0, PatternName::n1, PatternName::l0}) {
    SubspacePattern s = pattern(name);
    for (const auto& x : pattern_basis(s))
      for (GaussianRational c : {GaussianRational(1), I}) CHECK(subspace_membership(sigma(c * x), s));
  }
  for (const auto& x : sl_basis()) CHECK(sigma(x).in_sl());
}

TEST_CASE("fixed points of sigma have real dimension 16|8") {
  std::vector<AlgebraElement> even, odd;
  for (const auto& x : sl_basis()) (x.parity() == Parity::odd ? odd : even).push_back(x);
  CHECK(fixed_real_dimension(even) == 16);
  CHECK(fixed_real_dimension(odd) == 8);
  CHECK(sigma_fixed_dimension() == SuperDimension{16, 8});

  auto fixed = sigma_fixed_basis();
  CHECK(fixed.size() == 24);
  for (const auto& x : fixed) {
    CHECK(sigma(x) == x);
    CHECK(x.in_sl());
  }
  // Closure: the bracket of fixed elements is fixed.
  for (const auto& x : fixed)
    for (const auto& y : fixed) {
      AlgebraElement z = bracket(x, y);
      CHECK(sigma(z) == z);
    }
}

TEST_CASE("sigma on the even translations is A -> -A^dag") {
  Sampler rng(2);
  for (int k = 0; k < 20; ++k) {
    ComplexMatrix a = rng.complex_matrix(2, 2);
    AlgebraElement x = sigma(even_translation(a));
    CHECK(subspace_membership(x, pattern(PatternName::n0)));
    CHECK(translation_block(x) == -conjugate_transpose(a));
  }
  // The fixed set is exactly the skew-hermitian matrices.
  for (int k = 0; k < 20; ++k) {
    ComplexMatrix s = rng.skew_hermitian(2);
    CHECK(sigma(even_translation(s)) == even_translation(s));
    ComplexMatrix h = rng.hermitian(2);
    if (!h.is_zero_matrix()) CHECK_FALSE(sigma(even_translation(h)) == even_translation(h));
  }
}

TEST_CASE("sigma on the Lorentz part swaps the blocks") {
  Sampler rng(3);
  ComplexMatrix l = rng.complex_matrix(2, 2);
  ComplexMatrix r = rng.complex_matrix(2, 2);
  ComplexMatrix m(5, 5);
  m.set_block(0, 0, l);
  m.set_block(2, 2, r);
  AlgebraElement x = sigma(AlgebraElement(m));
  CHECK(block(x, 0, 0, 2, 2) == -conjugate_transpose(r));
  CHECK(block(x, 2, 2, 2, 2) == -conjugate_transpose(l));

  // diag(x, x^dag^-1) acts on the fixed even translations by A -> x A x^dag.
  for (int k = 0; k < 10; ++k) {
    ComplexMatrix g = rng.invertible_complex(2);
    ComplexMatrix a = rng.skew_hermitian(2);
    AlgebraElement moved = lorentz_conjugate(g, conjugate_transpose(g).inverse(), even_translation(a));
    CHECK(translation_block(moved) == g * a * conjugate_transpose(g));
    CHECK(sigma(moved) == moved);
  }
}

TEST_CASE("derived reality condition on the odd translations") {
  // sigma(gamma, delta) = (i delta^dag, i gamma^dag), so the fixed points
  // satisfy delta = i gamma^dag; delta = gamma^dag is not fixed.
  Sampler rng(4);
  for (int k = 0; k < 10; ++k) {
    ComplexMatrix gamma = rng.complex_matrix(2, 1);
    ComplexMatrix delta = rng.complex_matrix(1, 2);
    auto [g2, d2] = odd_translation_blocks(sigma(odd_translation(gamma, delta)));
    CHECK(g2 == I * conjugate_transpose(delta));
    CHECK(d2 == I * conjugate_transpose(gamma));
    AlgebraElement fixed = odd_translation(gamma, I * conjugate_transpose(gamma));
    CHECK(sigma(fixed) == fixed);
    if (!gamma.is_zero_matrix()) {
      AlgebraElement printed = odd_translation(gamma, conjugate_transpose(gamma));
      CHECK_FALSE(sigma(printed) == printed);
    }
  }
}

TEST_CASE("j sign parsing") {
  CHECK(parse_j_sign("-i") == JSign::minus_i);
  CHECK(parse_j_sign("+i") == JSign::plus_i);
  CHECK(parse_j_sign("i") == JSign::plus_i);
  CHECK_THROWS(parse_j_sign("2i"));
  CHECK(to_string(JSign::minus_i) == "-i");
  CHECK(ConjugationConfig{}.j() == GaussianRational(0, -1));
}

TEST_CASE("theta matches the block formula and reverses products") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(5);
  for (JSign js : {JSign::minus_i, JSign::plus_i}) {
    ConjugationConfig cfg{js};
    CHECK(theta_group(SuperMatrix::identity(a, kConformalShape), cfg) == SuperMatrix::identity(a, kConformalShape));
    for (int k = 0; k < 25; ++k) {
      SuperMatrix g = rng.invertible_supermatrix(a, kConformalShape, 2);
      SuperMatrix h = rng.invertible_supermatrix(a, kConformalShape, 2);
      CHECK(theta_group(g, cfg).entries() == oracle_theta(g, cfg.j()).entries());
      CHECK(theta_group(sm_mul(h, g), cfg) == sm_mul(theta_group(g, cfg), theta_group(h, cfg)));
    }
  }
}

TEST_CASE("theta on a purely even block diagonal matrix is the conjugate transpose") {
  auto a = GrassmannAlgebra::paired(2);
  Sampler rng(6);
  LambdaMatrix m = LambdaMatrix::identity(a, 5);
  m.set_block(0, 0, rng.invertible_even_matrix(a, 4, 2));
  m(4, 4) = rng.invertible_even(a, 2);
  SuperMatrix g(m, kConformalShape, MatrixParity::even);
  CHECK(theta_group(g, {}).entries() == m.dagger());
}

TEST_CASE("xi is a multiplicative involution preserving Ber = 1") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(7);
  ConjugationConfig cfg;
  SuperMatrix l = big_l(a);
  CHECK(xi_group(SuperMatrix::identity(a, kConformalShape), cfg) == SuperMatrix::identity(a, kConformalShape));
  for (int k = 0; k < 20; ++k) {
    SuperMatrix g = rng.invertible_supermatrix(a, kConformalShape, 2);
    SuperMatrix h = rng.invertible_supermatrix(a, kConformalShape, 2);
    SuperMatrix gx = xi_group(g, cfg);
    // L theta(g) L is the inverse of xi(g).
    CHECK(sm_mul(sm_mul(sm_mul(l, oracle_theta(g, cfg.j())), l), gx) == SuperMatrix::identity(a, kConformalShape));
    CHECK(xi_group(gx, cfg) == g);
    CHECK(xi_group(sm_mul(h, g), cfg) == sm_mul(xi_group(h, cfg), gx));
    SuperMatrix s = rng.special_supermatrix(a, kConformalShape, 2);
    CHECK(sm_berezinian(s) == SuperNumber(a, 1));
    CHECK(sm_berezinian(xi_group(s, cfg)) == SuperNumber(a, 1));
  }
}

TEST_CASE("theta and xi reject singular bodies") {
  auto a = GrassmannAlgebra::paired(1);
  LambdaMatrix m = LambdaMatrix::identity(a, 5);
  m(0, 0) = SuperNumber(a);
  CHECK_THROWS_AS(xi_group(SuperMatrix(m, kConformalShape, MatrixParity::even), {}), NotInvertible);
}

TEST_CASE("differential of xi") {
  Sampler rng(8);
  for (JSign js : {JSign::minus_i, JSign::plus_i}) {
    ConjugationConfig cfg{js};
    // Displayed form: sigma with the odd factor i replaced by -j.
    for (const auto& x : gl_basis())
      for (GaussianRational c : {GaussianRational(1), I}) {
        AlgebraElement y = c * x;
        AlgebraElement expected = oracle_sigma(y.even_part()) + (-cfg.j() / I) * oracle_sigma(y.odd_part());
        CHECK(xi_differential(y, cfg) == expected);
        CHECK(xi_differential(y.even_part(), cfg) == sigma(y.even_part()));
      }
  }
  CHECK(bootstrap_j_sign() == JSign::minus_i);
  ConjugationConfig plus{JSign::plus_i};
  for (const auto& x : gl_basis())
    if (x.parity() == Parity::odd) CHECK_FALSE(xi_differential(x, plus) == sigma(x));
  for (int k = 0; k < 10; ++k) {
    AlgebraElement x = rng.gl_element();
    CHECK(xi_differential(x, {}) == sigma(x));
  }
}

namespace {

// [[L, 0, 0], [M, R, R chi], [d phi, 0, d]].
SuperMatrix poincare_matrix(const LambdaMatrix& l, const LambdaMatrix& m, const LambdaMatrix& r,
                            const LambdaMatrix& chi, const LambdaMatrix& phi, const SuperNumber& d) {
  LambdaMatrix e(l.algebra(), 5, 5);
  e.set_block(0, 0, l);
  e.set_block(2, 0, m);
  e.set_block(2, 2, r);
  e.set_block(2, 4, r * chi);
  e.set_block(4, 0, d * phi);
  e(4, 4) = d;
  return SuperMatrix(e, kConformalShape, MatrixParity::even);
}

// A real super Poincare element built from the reality conditions.
SuperMatrix real_poincare(Sampler& rng, const AlgebraPtr& a, GaussianRational j) {
  LambdaMatrix l = rng.invertible_even_matrix(a, 2, 2);
  LambdaMatrix r = l.dagger().inverse();
  LambdaMatrix phi = rng.matrix(a, 1, 2, Parity::odd, 2);
  LambdaMatrix chi = (-j) * phi.dagger();
  LambdaMatrix k = rng.matrix(a, 2, 2, Parity::even, 2);
  LambdaMatrix shifted = k - k.dagger();
  LambdaMatrix l_inv = l.inverse();
  LambdaMatrix t = l.dagger().inverse() * phi.dagger() * phi * l_inv;
  LambdaMatrix m = (shifted - (j * GaussianRational(Rational(1, 2))) * t) * l;
  SuperNumber u = rng.invertible_even(a, 2);
  SuperNumber d = u * u.bar().inverse();
  return poincare_matrix(l, m, r, chi, phi, d);
}

}  // namespace

TEST_CASE("reality conditions on the super Poincare group") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(9);
  ConjugationConfig cfg;
  auto id = reality_conditions_poincare(SuperMatrix::identity(a, kConformalShape), cfg);
  CHECK(id.displayed_conditions());
  CHECK(id.d_condition);
  CHECK(id.fixed_by_xi);

  for (int k = 0; k < 20; ++k) {
    SuperMatrix g = real_poincare(rng, a, cfg.j());
    auto rep = reality_conditions_poincare(g, cfg);
    CHECK(rep.l_condition);
    CHECK(rep.chi_condition);
    CHECK(rep.m_condition);
    CHECK(rep.d_condition);
    CHECK(rep.shifted_skew_hermitian);
    CHECK(rep.fixed_by_xi);
    CHECK(xi_group(g, cfg) == g);
  }
}

TEST_CASE("violating a reality condition breaks xi-invariance") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(10);
  ConjugationConfig cfg;
  for (int k = 0; k < 10; ++k) {
    SuperMatrix g = real_poincare(rng, a, cfg.j());
    LambdaMatrix e = g.entries();
    // Replace chi by +j phi^dag.
    LambdaMatrix r = e.block(2, 2, 2, 2);
    LambdaMatrix phi = e(4, 4).inverse() * e.block(4, 0, 1, 2);
    if (phi(0, 0).is_zero() && phi(0, 1).is_zero()) continue;
    e.set_block(2, 4, r * (cfg.j() * phi.dagger()));
    SuperMatrix bad(e, kConformalShape, MatrixParity::even);
    auto rep = reality_conditions_poincare(bad, cfg);
    CHECK_FALSE(rep.chi_condition);
    CHECK_FALSE(rep.fixed_by_xi);
    CHECK_FALSE(xi_group(bad, cfg) == bad);
  }
  // The displayed conditions do not constrain d; |d| != 1 is not fixed.
  LambdaMatrix e = LambdaMatrix::identity(a, 5);
  e(4, 4) = SuperNumber(a, 2);
  auto rep = reality_conditions_poincare(SuperMatrix(e, kConformalShape, MatrixParity::even), cfg);
  CHECK(rep.displayed_conditions());
  CHECK_FALSE(rep.d_condition);
  CHECK_FALSE(rep.fixed_by_xi);
}

TEST_CASE("reality report rejects matrices outside the pattern") {
  auto a = GrassmannAlgebra::paired(1);
  LambdaMatrix e = LambdaMatrix::identity(a, 5);
  e(0, 2) = SuperNumber(a, 1);
  CHECK_THROWS_AS(reality_conditions_poincare(SuperMatrix(e, kConformalShape, MatrixParity::even), {}),
                  PatternViolation);
}
