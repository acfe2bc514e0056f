#include <doctest.h>

#include <set>

#include "superspace/errors.hpp"
#include "superspace/liesuper.hpp"
#include "superspace/random.hpp"

using namespace superspace;

namespace {

AlgebraElement e(std::size_t i, std::size_t j) { return AlgebraElement::elementary(i, j); }

int grade(std::size_t i, std::size_t j) { return (i == 5) != (j == 5) ? 1 : 0; }

// [E_ij, E_kl] = delta_jk E_il - (-1)^{|ij||kl|} delta_li E_kj.
AlgebraElement oracle_bracket(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  AlgebraElement out;
  if (j == k) out = out + e(i, l);
  if (l == i) out = out - GaussianRational(grade(i, j) && grade(k, l) ? -1 : 1) * e(k, j);
  return out;
}

// The root lists as printed: p gets +-(a1-a2), +-(a3-a4), a3-ai, a4-ai, a5-ai
// (i = 1, 2) and aj-a5 (j = 3, 4); n gets aj-ai, a5-ai, aj-a5 for i = 3, 4,
// j = 1, 2.
std::set<Root> printed_p_roots() {
  std::set<Root> s = {Root::difference(1, 2), Root::difference(2, 1), Root::difference(3, 4),
                      Root::difference(4, 3)};
  for (std::size_t i : {1, 2})
    for (std::size_t k : {3, 4, 5}) s.insert(Root::difference(k, i));
  for (std::size_t j : {3, 4}) s.insert(Root::difference(j, 5));
  return s;
}

std::set<Root> printed_n_roots() {
  std::set<Root> s;
  for (std::size_t i : {3, 4})
    for (std::size_t j : {1, 2}) {
      s.insert(Root::difference(j, i));
      s.insert(Root::difference(5, i));
      s.insert(Root::difference(j, 5));
    }
  return s;
}

ComplexMatrix column(GaussianRational a, GaussianRational b) { return ComplexMatrix{{a}, {b}}; }
ComplexMatrix row(GaussianRational a, GaussianRational b) { return ComplexMatrix{{a, b}}; }

}  // namespace

TEST_CASE("grading by position") {
  CHECK(e(1, 5).parity() == Parity::odd);
  CHECK(e(5, 3).parity() == Parity::odd);
  CHECK(e(5, 5).parity() == Parity::even);
  CHECK(e(2, 4).parity() == Parity::even);
  CHECK((e(1, 5) + e(1, 2)).parity() == Parity::mixed);
  CHECK(AlgebraElement().parity() == Parity::even);
}

TEST_CASE("bracket on elementary matrices matches the closed form") {
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = 1; j <= 5; ++j)
      for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t l = 1; l <= 5; ++l) CHECK(bracket(e(i, j), e(k, l)) == oracle_bracket(i, j, k, l));
}

TEST_CASE("bracket examples") {
  CHECK(bracket(e(1, 5), e(5, 1)) == e(1, 1) + e(5, 5));
  Sampler rng(1);
  AlgebraElement x = rng.gl_element().even_part();
  CHECK(bracket(x, x).is_zero());
  for (const auto& a : gl_basis())
    for (const auto& b : gl_basis()) CHECK(bracket(a, b).supertrace().is_zero());
}

TEST_CASE("super-Jacobi on random homogeneous triples") {
  Sampler rng(2);
  for (int k = 0; k < 300; ++k) {
    Parity px, py, pz;
    AlgebraElement x = GaussianRational(rng.nonzero_gaussian()) * rng.homogeneous_basis_element(&px);
    AlgebraElement y = rng.homogeneous_basis_element(&py);
    AlgebraElement z = rng.homogeneous_basis_element(&pz);
    auto s = [](Parity a, Parity b) { return GaussianRational(a == Parity::odd && b == Parity::odd ? -1 : 1); };
    AlgebraElement sum = s(px, pz) * bracket(x, bracket(y, z)) + s(py, px) * bracket(y, bracket(z, x)) +
                         s(pz, py) * bracket(z, bracket(x, y));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("dimensions of the patterns") {
  CHECK(sl_basis().size() == 24);
  CHECK(pattern_dimension(pattern(PatternName::p)) == SuperDimension{12, 4});
  CHECK(pattern_dimension(pattern(PatternName::n)) == SuperDimension{4, 4});
  CHECK(pattern_dimension(pattern(PatternName::n0)) == SuperDimension{4, 0});
  CHECK(pattern_dimension(pattern(PatternName::n1)) == SuperDimension{0, 4});
  CHECK(pattern_dimension(pattern(PatternName::l0)) == SuperDimension{7, 0});
  CHECK(pattern_dimension(pattern(PatternName::h)) == SuperDimension{4, 0});
  for (PatternName p : {PatternName::p1, PatternName::p2, PatternName::p3, PatternName::p4})
    CHECK(pattern_dimension(pattern(p)) == SuperDimension{12, 4});
}

TEST_CASE("p and n are complementary subalgebras") {
  for (PatternName p : {PatternName::p, PatternName::n, PatternName::n0, PatternName::l0, PatternName::h,
                        PatternName::p1, PatternName::p4})
    CHECK(closed_under_bracket(pattern(p)));
  SubspacePattern sp = pattern(PatternName::p);
  SubspacePattern sn = pattern(PatternName::n);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(sp.allows(i, j) != sn.allows(i, j));
}

TEST_CASE("the p2 and p3 displays are not closed under the bracket") {
  // n1 alone is not a subalgebra either: its brackets land in n0.
  CHECK_FALSE(closed_under_bracket(pattern(PatternName::n1)));
  SubspacePattern p2 = pattern(PatternName::p2);
  CHECK(subspace_membership(e(3, 4), p2));
  CHECK(subspace_membership(e(4, 5), p2));
  CHECK(bracket(e(3, 4), e(4, 5)) == e(3, 5));
  CHECK_FALSE(subspace_membership(e(3, 5), p2));
  CHECK_FALSE(closed_under_bracket(p2));
  SubspacePattern p3 = pattern(PatternName::p3);
  CHECK(bracket(e(1, 2), e(2, 5)) == e(1, 5));
  CHECK(subspace_membership(e(1, 2), p3));
  CHECK(subspace_membership(e(2, 5), p3));
  CHECK_FALSE(subspace_membership(e(1, 5), p3));
  CHECK_FALSE(closed_under_bracket(p3));
}

TEST_CASE("split_pn") {
  Sampler rng(3);
  for (int k = 0; k < 100; ++k) {
    AlgebraElement x = rng.sl_element();
    auto [xp, xn] = split_pn(x);
    CHECK(xp + xn == x);
    CHECK(subspace_membership(xp, pattern(PatternName::p)));
    CHECK(subspace_membership(xn, pattern(PatternName::n)));
    CHECK(split_pn(xp).first == xp);
    CHECK(split_pn(xn).second == xn);
  }
  CHECK_THROWS_AS(split_pn(e(1, 1)), std::invalid_argument);
  AlgebraElement a = e(1, 3) + e(2, 4);
  CHECK(split_pn(a).first.is_zero());
}

TEST_CASE("membership") {
  for (PatternName p : {PatternName::p, PatternName::n, PatternName::p3}) CHECK(subspace_membership(AlgebraElement(), pattern(p)));
  AlgebraElement l0 = e(1, 2) + e(4, 3) + e(1, 1) - e(3, 3);
  CHECK(subspace_membership(l0, pattern(PatternName::l0)));
  CHECK(subspace_membership(l0, pattern(PatternName::p)));
  CHECK_FALSE(subspace_membership(e(1, 3), pattern(PatternName::p)));
  // Supertrace constraint c = tr L + tr R.
  CHECK_FALSE(subspace_membership(e(1, 1), pattern(PatternName::p)));
  CHECK(subspace_membership(e(1, 1) + e(5, 5), pattern(PatternName::p)));
  CHECK_THROWS(parse_pattern_name("q"));
  CHECK(parse_pattern_name("n1") == PatternName::n1);
}

TEST_CASE("translation algebra structure") {
  TranslationReport rn = verify_translation_algebra(pattern(PatternName::n));
  CHECK(rn.even_abelian);
  CHECK(rn.even_acts_trivially);
  CHECK(rn.odd_bracket_in_even);
  CHECK(rn.odd_bracket_nonzero);
  CHECK(rn.passed());
  TranslationReport rp = verify_translation_algebra(pattern(PatternName::p));
  CHECK_FALSE(rp.even_abelian);
  CHECK_FALSE(rp.passed());
  TranslationReport r0 = verify_translation_algebra(pattern(PatternName::n0));
  CHECK(r0.even_abelian);
  CHECK(r0.dims == SuperDimension{4, 0});
}

TEST_CASE("root spaces match the printed lists") {
  auto pr = pattern_roots(pattern(PatternName::p));
  auto nr = pattern_roots(pattern(PatternName::n));
  CHECK(pr.size() == 12);
  CHECK(nr.size() == 8);
  CHECK(std::set<Root>(pr.begin(), pr.end()) == printed_p_roots());
  CHECK(std::set<Root>(nr.begin(), nr.end()) == printed_n_roots());
}

TEST_CASE("root decomposition") {
  auto d = root_decomposition(e(1, 1) - e(2, 2));
  CHECK(d.components.empty());
  auto d12 = root_decomposition(e(1, 2));
  REQUIRE(d12.components.size() == 1);
  CHECK(d12.components.begin()->first == Root::difference(1, 2));
  CHECK(Root::difference(1, 2).to_string() == "a1-a2");

  Sampler rng(4);
  AlgebraElement x = rng.gl_element();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      ComplexMatrix m = x.matrix();
      if (m(i, j).is_zero()) m(i, j) = 1;
      x = AlgebraElement(m);
    }
  auto full = root_decomposition(x);
  CHECK(full.components.size() == 20);
  ComplexMatrix sum(5, 5);
  for (std::size_t i = 0; i < 5; ++i) sum(i, i) = full.cartan[i];
  std::size_t in_p = 0;
  for (const auto& [root, comp] : full.components) {
    sum = sum + comp.matrix();
    if (printed_p_roots().count(root)) ++in_p;
    // The root space is an eigenspace of the Cartan action.
    AlgebraElement h = e(1, 1) + GaussianRational(2) * e(2, 2) + GaussianRational(5) * e(3, 3) +
                       GaussianRational(7) * e(4, 4) + GaussianRational(15) * e(5, 5);
    auto [i, j] = root.indices();
    GaussianRational eigen = h(i - 1, i - 1) - h(j - 1, j - 1);
    CHECK(bracket(h, comp) == eigen * comp);
  }
  CHECK(AlgebraElement(sum) == x);
  CHECK(in_p == 12);
}

TEST_CASE("Lorentz action on the odd translations") {
  Sampler rng(5);
  for (int k = 0; k < 30; ++k) {
    ComplexMatrix x = rng.invertible_complex(2);
    ComplexMatrix y = rng.invertible_complex(2);
    ComplexMatrix gamma = rng.complex_matrix(2, 1);
    ComplexMatrix delta = rng.complex_matrix(1, 2);
    auto [g2, d2] = lorentz_act(x, y, gamma, delta);
    AlgebraElement conj = lorentz_conjugate(x, y, odd_translation(gamma, delta));
    CHECK(conj == odd_translation(g2, d2));

    ComplexMatrix x2 = rng.invertible_complex(2);
    ComplexMatrix y2 = rng.invertible_complex(2);
    auto [g3, d3] = lorentz_act(x2, y2, g2, d2);
    auto [g4, d4] = lorentz_act(x2 * x, y2 * y, gamma, delta);
    CHECK(g3 == g4);
    CHECK(d3 == d4);
  }
  ComplexMatrix id = ComplexMatrix::identity(2);
  auto [g, d] = lorentz_act(id, id, column(1, 2), row(3, 4));
  CHECK(g == column(1, 2));
  CHECK(d == row(3, 4));
  CHECK_THROWS_AS(lorentz_act(id, ComplexMatrix(2, 2), column(1, 2), row(3, 4)), NotInvertible);
}

TEST_CASE("odd pairing lands in n0 and preserves q") {
  auto odd_basis = pattern_basis(pattern(PatternName::n1));
  REQUIRE(odd_basis.size() == 4);
  for (const auto& a : odd_basis)
    for (const auto& b : odd_basis) {
      AlgebraElement c = odd_pair(a, b);
      CHECK(c == bracket(a, b));
      CHECK(subspace_membership(c, pattern(PatternName::n0)));
      auto [ga, da] = odd_translation_blocks(a);
      auto [gb, db] = odd_translation_blocks(b);
      CHECK(translation_block(c) == ga * db + gb * da);
    }
  CHECK_THROWS_AS(odd_pair(e(1, 3), odd_basis[0]), PatternViolation);

  Sampler rng(6);
  for (int k = 0; k < 50; ++k) {
    ComplexMatrix x = rng.special_linear(2);
    ComplexMatrix y = rng.special_linear(2);
    AlgebraElement v = odd_translation(rng.complex_matrix(2, 1), rng.complex_matrix(1, 2));
    AlgebraElement w = odd_translation(rng.complex_matrix(2, 1), rng.complex_matrix(1, 2));
    auto [gv, dv] = lorentz_act(x, y, odd_translation_blocks(v).first, odd_translation_blocks(v).second);
    auto [gw, dw] = lorentz_act(x, y, odd_translation_blocks(w).first, odd_translation_blocks(w).second);
    CHECK(q_form(odd_pair(v, w)) == q_form(odd_pair(odd_translation(gv, dv), odd_translation(gw, dw))));
  }
}

TEST_CASE("conversion to and from supermatrices") {
  auto a = GrassmannAlgebra::real(0);
  Sampler rng(7);
  AlgebraElement x = rng.gl_element();
  CHECK(AlgebraElement(x.to_supermatrix(a)) == x);
  auto b = GrassmannAlgebra::real(1);
  SuperMatrix s = x.to_supermatrix(b);
  LambdaMatrix m = s.entries();
  m(0, 0) += SuperNumber::generator(b, 1);
  CHECK_THROWS(AlgebraElement(SuperMatrix(m, kConformalShape, MatrixParity::inhomogeneous)));
}
