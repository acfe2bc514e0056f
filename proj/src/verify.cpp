#include "superspace/verify.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "superspace/errors.hpp"
#include "superspace/geometry.hpp"
#include "superspace/liesuper.hpp"
#include "superspace/random.hpp"
#include "superspace/superflag.hpp"

namespace superspace {

namespace {

struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  void operator()(bool ok) {
    ++total;
    if (!ok) ++failed;
  }
};

class SuiteRunner {
 public:
  SuiteRunner(std::string suite, SuiteReport& report) : suite_(std::move(suite)), report_(report) {}

  void check(const std::string& name, const std::string& anchor, const std::function<void(Tally&)>& body) {
    Tally t;
    CheckResult r{suite_, name, anchor, false, {}};
    try {
      body(t);
      r.passed = t.total > 0 && t.failed == 0;
      r.detail = std::to_string(t.total - t.failed) + "/" + std::to_string(t.total);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  void note(const std::string& text) { report_.notes.push_back(suite_ + ": " + text); }

 private:
  std::string suite_;
  SuiteReport& report_;
};

int sign(Parity a, Parity b) { return a == Parity::odd && b == Parity::odd ? -1 : 1; }

std::vector<SuperNumber> monomials(const AlgebraPtr& a) {
  std::vector<SuperNumber> out;
  for (Mask m = 0; m <= a->full_mask(); ++m) out.push_back(SuperNumber::monomial(a, m));
  return out;
}

void grassmann_suite(const VerifyOptions& opt, SuiteReport& rep) {
  SuiteRunner s("grassmann", rep);
  s.check("monomial axioms, q <= 4", "associative, distributive, supercommutative", [](Tally& t) {
    std::vector<AlgebraPtr> algebras;
    for (unsigned q = 0; q <= 4; ++q) algebras.push_back(GrassmannAlgebra::real(q));
    algebras.push_back(GrassmannAlgebra::paired(2));
    for (const auto& a : algebras) {
      auto basis = monomials(a);
      for (const auto& u : basis)
        for (const auto& v : basis) {
          t(u * v == GaussianRational(sign(u.parity(), v.parity())) * (v * u));
          for (const auto& w : basis) {
            t((u * v) * w == u * (v * w));
            t(u * (v + w) == u * v + u * w);
          }
          t((u * v).bar() == u.bar() * v.bar());
        }
      for (const auto& u : basis) t(u.bar().bar() == u);
    }
  });
  s.check("random elements, q = 8", "ring axioms and bar on 500 random pairs", [&](Tally& t) {
    auto a = GrassmannAlgebra::paired(4);
    Sampler rng(opt.seed);
    for (int k = 0; k < 500; ++k) {
      SuperNumber u = rng.any(a, 6), v = rng.any(a, 6), w = rng.any(a, 4);
      t((u * v) * w == u * (v * w));
      t(u * (v + w) == u * v + u * w);
      t((u + v) * w == u * w + v * w);
      t((u * v).bar() == u.bar() * v.bar());
      t(u.bar().bar() == u);
      SuperNumber e = rng.even(a, 3), o1 = rng.odd(a, 3), o2 = rng.odd(a, 3);
      t(e * o1 == o1 * e);
      t(o1 * o2 == -(o2 * o1));
    }
  });
  s.check("inverse", "x x^{-1} = 1 when the body is nonzero", [&](Tally& t) {
    auto a = GrassmannAlgebra::paired(4);
    Sampler rng(opt.seed + 1);
    for (int k = 0; k < 100; ++k) {
      SuperNumber x = rng.invertible_even(a, 4) + rng.odd(a, 2);
      t(x * x.inverse() == SuperNumber(a, 1));
    }
  });
}

void berezinian_suite(const VerifyOptions& opt, SuiteReport& rep) {
  SuiteRunner s("berezinian", rep);
  auto ber = opt.printed_berezinian ? berezinian_unnormalized_variant : sm_berezinian;
  s.note(opt.printed_berezinian ? "using the variant det(s^-1) det(p - q s r)"
                                : "using Ber = det(p - q s^-1 r) / det(s)");
  auto a = GrassmannAlgebra::paired(4);
  for (BlockShape sh : {BlockShape{1, 1}, BlockShape{2, 1}, BlockShape{2, 2}, BlockShape{4, 1}}) {
    std::string label = std::to_string(sh.m) + "|" + std::to_string(sh.n);
    s.check("multiplicativity " + label, "Ber(gh) = Ber(g) Ber(h), 200 pairs", [&](Tally& t) {
      Sampler rng(opt.seed + 10 * sh.m + sh.n);
      for (int k = 0; k < 200; ++k) {
        SuperMatrix g = rng.invertible_supermatrix(a, sh, 2);
        SuperMatrix h = rng.invertible_supermatrix(a, sh, 2);
        t(ber(sm_mul(g, h)) == ber(g) * ber(h));
      }
    });
  }
  s.check("inverse", "g g^{-1} = 1 and Ber(g^{-1}) = Ber(g)^{-1}", [&](Tally& t) {
    Sampler rng(opt.seed + 2);
    for (int k = 0; k < 30; ++k) {
      SuperMatrix g = rng.invertible_supermatrix(a, kConformalShape, 2);
      SuperMatrix gi = sm_inverse(g);
      t(sm_mul(g, gi) == SuperMatrix::identity(a, kConformalShape));
      t(ber(gi) == ber(g).inverse());
    }
  });
  s.check("variant witness", "det(s^-1) det(p - q s r) fails multiplicativity", [&](Tally& t) {
    Sampler rng(opt.seed + 3);
    bool found = false;
    for (int k = 0; k < 50 && !found; ++k) {
      SuperMatrix g = rng.invertible_supermatrix(a, {1, 1}, 2);
      SuperMatrix h = rng.invertible_supermatrix(a, {1, 1}, 2);
      found = !(berezinian_unnormalized_variant(sm_mul(g, h)) ==
                berezinian_unnormalized_variant(g) * berezinian_unnormalized_variant(h));
    }
    t(found);
  });
}

std::set<Root> expected_p_roots() {
  std::set<Root> r = {Root::difference(1, 2), Root::difference(2, 1), Root::difference(3, 4), Root::difference(4, 3)};
  for (std::size_t i : {1, 2})
    for (std::size_t k : {3, 4, 5}) r.insert(Root::difference(k, i));
  for (std::size_t j : {3, 4}) r.insert(Root::difference(j, 5));
  return r;
}

std::set<Root> expected_n_roots() {
  std::set<Root> r;
  for (std::size_t i : {3, 4})
    for (std::size_t j : {1, 2}) {
      r.insert(Root::difference(j, i));
      r.insert(Root::difference(5, i));
      r.insert(Root::difference(j, 5));
    }
  return r;
}

bool jacobi(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  Parity px = x.parity(), py = y.parity(), pz = z.parity();
  AlgebraElement sum = GaussianRational(sign(px, pz)) * bracket(x, bracket(y, z)) +
                       GaussianRational(sign(py, px)) * bracket(y, bracket(z, x)) +
                       GaussianRational(sign(pz, py)) * bracket(z, bracket(x, y));
  return sum.is_zero();
}

void liesuper_suite(const VerifyOptions& opt, SuiteReport& rep) {
  SuiteRunner s("liesuper", rep);
  auto basis = gl_basis();
  s.check(opt.full ? "super-Jacobi, all basis triples" : "super-Jacobi, 2000 basis triples",
          "graded Jacobi identity on gl(4|1)", [&](Tally& t) {
            if (opt.full) {
              for (const auto& x : basis)
                for (const auto& y : basis)
                  for (const auto& z : basis) t(jacobi(x, y, z));
              return;
            }
            Sampler rng(opt.seed);
            for (int k = 0; k < 2000; ++k) {
              AlgebraElement x = rng.homogeneous_basis_element(nullptr);
              AlgebraElement y = rng.homogeneous_basis_element(nullptr);
              AlgebraElement z = rng.homogeneous_basis_element(nullptr);
              t(jacobi(x, y, z));
            }
          });
  s.check("dimensions", "sl(4|1) = p + n with 16|8 = 12|4 + 4|4", [&](Tally& t) {
    SuperDimension sl;
    for (const auto& x : sl_basis()) (x.parity() == Parity::odd ? sl.odd : sl.even)++;
    t(sl == SuperDimension{16, 8});
    t(pattern_dimension(pattern(PatternName::p)) == SuperDimension{12, 4});
    t(pattern_dimension(pattern(PatternName::n)) == SuperDimension{4, 4});
    for (const auto& x : sl_basis()) {
      auto [xp, xn] = split_pn(x);
      t(xp + xn == x);
      t(subspace_membership(xp, pattern(PatternName::p)));
      t(subspace_membership(xn, pattern(PatternName::n)));
    }
  });
  s.check("subalgebras", "p and n are closed under the bracket", [&](Tally& t) {
    t(closed_under_bracket(pattern(PatternName::p)));
    t(closed_under_bracket(pattern(PatternName::n)));
  });
  s.check("translation algebra", "[n0,n0] = 0, [n0,n1] = 0, 0 != [n1,n1] in n0", [&](Tally& t) {
    TranslationReport r = verify_translation_algebra(pattern(PatternName::n));
    t(r.even_abelian);
    t(r.even_acts_trivially);
    t(r.odd_bracket_in_even);
    t(r.odd_bracket_nonzero);
    t(r.dims_are_4_4());
  });
  s.check("roots", "root spaces of p and n", [&](Tally& t) {
    auto pr = pattern_roots(pattern(PatternName::p));
    auto nr = pattern_roots(pattern(PatternName::n));
    t(std::set<Root>(pr.begin(), pr.end()) == expected_p_roots());
    t(std::set<Root>(nr.begin(), nr.end()) == expected_n_roots());
  });
  s.check("Lorentz action", "(gamma, delta) -> (x gamma, delta y^-1) is an action preserving q", [&](Tally& t) {
    Sampler rng(opt.seed + 1);
    for (int k = 0; k < 100; ++k) {
      ComplexMatrix x1 = rng.special_linear(2), y1 = rng.special_linear(2);
      ComplexMatrix x2 = rng.special_linear(2), y2 = rng.special_linear(2);
      ComplexMatrix g = rng.complex_matrix(2, 1), d = rng.complex_matrix(1, 2);
      auto [g1, d1] = lorentz_act(x1, y1, g, d);
      auto [g2, d2] = lorentz_act(x2, y2, g1, d1);
      auto [g3, d3] = lorentz_act(x2 * x1, y2 * y1, g, d);
      t(g2 == g3 && d2 == d3);
      t(lorentz_conjugate(x1, y1, odd_translation(g, d)) == odd_translation(g1, d1));
      AlgebraElement v = odd_translation(g, d);
      AlgebraElement w = odd_translation(rng.complex_matrix(2, 1), rng.complex_matrix(1, 2));
      auto [wg, wd] = odd_translation_blocks(w);
      auto [wg1, wd1] = lorentz_act(x1, y1, wg, wd);
      t(q_form(odd_pair(v, w)) == q_form(odd_pair(odd_translation(g1, d1), odd_translation(wg1, wd1))));
    }
  });
}

void realform_suite(const VerifyOptions& opt, SuiteReport& rep) {
  SuiteRunner s("realform", rep);
  const ConjugationConfig& cfg = opt.cfg;
  JSign resolved = bootstrap_j_sign();
  s.note("resolved j sign: " + to_string(resolved) + " (configured: " + to_string(cfg.j_sign) + ")");
  auto basis = gl_basis();
  const GaussianRational I = GaussianRational::i();
  s.check("sigma antilinear involution", "sigma(c X) = conj(c) sigma(X), sigma^2 = 1", [&](Tally& t) {
    for (const auto& x : basis)
      for (GaussianRational c : {GaussianRational(1), I, GaussianRational(1, 1)}) {
        t(sigma(c * x) == c.conj() * sigma(x));
        t(sigma(sigma(c * x)) == c * x);
      }
  });
  s.check("sigma preserves brackets", "sigma[X, Y] = [sigma X, sigma Y], parity kept", [&](Tally& t) {
    for (const auto& x : basis) {
      t(sigma(x).parity() == x.parity());
      for (const auto& y : basis) t(sigma(bracket(x, y)) == bracket(sigma(x), sigma(y)));
    }
  });
  s.check("sigma preserves p and n", "sigma(p) = p, sigma(n) = n", [&](Tally& t) {
    for (PatternName name : {PatternName::p, PatternName::n}) {
      SubspacePattern pat = pattern(name);
      for (const auto& x : pattern_basis(pat))
        for (GaussianRational c : {GaussianRational(1), I}) t(subspace_membership(sigma(c * x), pat));
    }
  });
  s.check("fixed dimension", "the sigma-fixed real form has dimension 16|8", [&](Tally& t) {
    t(sigma_fixed_dimension() == SuperDimension{16, 8});
    for (const auto& x : sigma_fixed_basis()) t(sigma(x) == x);
  });
  s.check("fixed big cell", "sigma-fixed even translations are the skew-hermitian A", [&](Tally& t) {
    Sampler rng(opt.seed);
    for (int k = 0; k < 50; ++k) {
      ComplexMatrix a = rng.complex_matrix(2, 2);
      bool fixed = sigma(even_translation(a)) == even_translation(a);
      t(fixed == (a == -conjugate_transpose(a)));
      ComplexMatrix sk = rng.skew_hermitian(2);
      t(sigma(even_translation(sk)) == even_translation(sk));
    }
  });
  auto a = GrassmannAlgebra::paired(4);
  s.check("theta reverses products", "(hg)^theta = g^theta h^theta, 100 pairs", [&](Tally& t) {
    Sampler rng(opt.seed + 1);
    for (int k = 0; k < 100; ++k) {
      SuperMatrix g = rng.invertible_supermatrix(a, kConformalShape, 2);
      SuperMatrix h = rng.invertible_supermatrix(a, kConformalShape, 2);
      t(theta_group(sm_mul(h, g), cfg) == sm_mul(theta_group(g, cfg), theta_group(h, cfg)));
    }
  });
  s.check("xi involution", "(g^xi)^xi = g and Ber(g) = 1 => Ber(g^xi) = 1, 100 samples", [&](Tally& t) {
    Sampler rng(opt.seed + 2);
    for (int k = 0; k < 100; ++k) {
      SuperMatrix g = rng.invertible_supermatrix(a, kConformalShape, 2);
      t(xi_group(xi_group(g, cfg), cfg) == g);
      if (k < 20) {
        SuperMatrix sg = rng.special_supermatrix(a, kConformalShape, 2);
        t(sm_berezinian(xi_group(sg, cfg)) == SuperNumber(a, 1));
      }
    }
  });
  s.check("differential of xi", "d(xi) at the identity equals sigma", [&](Tally& t) {
    for (const auto& x : basis)
      for (GaussianRational c : {GaussianRational(1), I}) t(xi_differential(c * x, cfg) == sigma(c * x));
  });
  s.check("j bootstrap", "exactly one j makes d(xi) = sigma; it is the configured one", [&](Tally& t) {
    t(resolved == cfg.j_sign);
  });
}

void geometry_suite(const VerifyOptions& opt, SuiteReport& rep) {
  SuiteRunner s("geometry", rep);
  Sampler rng(opt.seed);
  s.check("Klein relation", "y12 y34 + y23 y14 + y31 y24 = 0 on 500 planes", [&](Tally& t) {
    for (int k = 0; k < 500; ++k) t(klein_form(plucker(rng.plane(3))) == GaussianRational(0));
  });
  s.check("big cell coordinates", "plucker(I; A) = (1, -a, -b, d, -c, ad - bc)", [&](Tally& t) {
    for (int k = 0; k < 200; ++k) {
      ComplexMatrix m = rng.complex_matrix(2, 2);
      const auto &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
      PluckerPoint y = plucker(cell_to_plane(m));
      t(y == PluckerPoint{{GaussianRational(1), -a, -b, d, -c, a * d - b * c}});
      t(chart_to_cell(y) == m);
    }
  });
  s.check("conformal scaling", "Q(g y) = det(g) Q(y), 100 pairs", [&](Tally& t) {
    for (int k = 0; k < 100; ++k) {
      ComplexMatrix g = rng.invertible_complex(4, 2);
      PluckerPoint y;
      for (auto& v : y.y) v = rng.gaussian();
      t(klein_form(conformal_act_wedge(g, y)) == g.determinant() * klein_form(y));
    }
  });
  s.check("real signature", "Q_R has signature (4,2)", [&](Tally& t) { t(qr_signature() == Signature{4, 2, 0}); });
  s.check("Poincare action", "A -> N + R A L^-1 matches the action on planes", [&](Tally& t) {
    for (int k = 0; k < 100; ++k) {
      PoincareParams p{rng.invertible_complex(2), rng.invertible_complex(2), rng.complex_matrix(2, 2)};
      ComplexMatrix a = rng.complex_matrix(2, 2);
      PluckerPoint moved = plucker(Plane(p.matrix() * cell_to_plane(a).basis()));
      t(projectively_equal(moved, plucker(cell_to_plane(poincare_act(p, a)))));
      t(moved.y12() != GaussianRational(0));
    }
  });
  s.check("theta on Pluecker coordinates", "theta is an involution and Q(theta y) = conj Q(y)", [&](Tally& t) {
    for (int k = 0; k < 100; ++k) {
      PluckerPoint y;
      for (auto& v : y.y) v = rng.gaussian();
      t(theta_plucker(theta_plucker(y)) == y);
      t(klein_form(theta_plucker(y)) == klein_form(y).conj());
    }
  });
}

LambdaMatrix lift(const AlgebraPtr& a, const ComplexMatrix& m) {
  LambdaMatrix out(a, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = SuperNumber(a, m(i, j));
  return out;
}

SuperMatrix cell_matrix(Sampler& rng, const AlgebraPtr& a) {
  for (;;) {
    SuperMatrix g = rng.invertible_supermatrix(a, kConformalShape, 2);
    try {
      pi_chart(g);
      return g;
    } catch (const NotInBigCell&) {
    }
  }
}

void superflag_suite(const VerifyOptions& opt, SuiteReport& rep) {
  SuiteRunner s("superflag", rep);
  const ConjugationConfig& cfg = opt.cfg;
  const GaussianRational j = cfg.j();
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(opt.seed);
  s.check("twistor relation", "A = B + beta alpha on both charts", [&](Tally& t) {
    for (int k = 0; k < 20; ++k) t(twistor_check(flag_charts(cell_matrix(rng, a))));
  });
  s.check("pi equivariance", "pi(P g) = P . pi(g), 50 pairs over q = 8", [&](Tally& t) {
    for (int k = 0; k < 50; ++k) {
      SuperPoincareElement p = rng.super_poincare(a, 2);
      SuperMatrix g = cell_matrix(rng, a);
      t(pi_chart(sm_mul(p.matrix(), g)) == superpoincare_act(p, pi_chart(g)));
    }
  });
  s.check("stabilizer", "pi(H) is the base point", [&](Tally& t) {
    for (int k = 0; k < 20; ++k) {
      LambdaMatrix e = cell_matrix(rng, a).entries();
      e.set_block(2, 0, LambdaMatrix(a, 2, 2));
      e.set_block(4, 0, LambdaMatrix(a, 1, 2));
      e.set_block(2, 4, LambdaMatrix(a, 2, 1));
      e.set_block(2, 2, rng.invertible_even_matrix(a, 2, 2));
      SuperMatrix h(e, kConformalShape, MatrixParity::even);
      t(stabilizer_membership(h));
      t(pi_chart(h) == BigCellPoint::origin(a));
    }
  });
  s.check("classical reduction", "odd parts zero: A -> R A L^-1 + N", [&](Tally& t) {
    for (int k = 0; k < 20; ++k) {
      PoincareParams g{rng.invertible_complex(2), rng.invertible_complex(2), rng.complex_matrix(2, 2)};
      ComplexMatrix m = rng.complex_matrix(2, 2);
      SuperPoincareElement p{lift(a, g.l),         lift(a, g.r),         lift(a, g.n),
                             LambdaMatrix(a, 2, 1), LambdaMatrix(a, 1, 2), SuperNumber(a, 1)};
      BigCellPoint pt{lift(a, m), LambdaMatrix(a, 1, 2), LambdaMatrix(a, 2, 1)};
      t(superpoincare_act(p, pt).a == lift(a, poincare_act(g, m)));
    }
  });
  s.check("differential of pi", "d(pi) maps the transposed n pattern onto the 4|4 coordinates", [&](Tally& t) {
    const std::pair<std::size_t, std::size_t> cells[8] = {{3, 1}, {3, 2}, {4, 1}, {4, 2},
                                                          {5, 1}, {5, 2}, {3, 5}, {4, 5}};
    ComplexMatrix images(8, 8);
    for (std::size_t k = 0; k < 8; ++k) {
      auto d = pi_differential(AlgebraElement::elementary(cells[k].first, cells[k].second));
      for (std::size_t c = 0; c < 8; ++c) images(c, k) = d[c];
    }
    t(images.rank() == 8);
  });
  s.check("action homomorphism", "acting by P2 then P1 equals acting by P1 P2", [&](Tally& t) {
    for (int k = 0; k < 20; ++k)
      t(act_homomorphism_check(rng.super_poincare(a, 2), rng.super_poincare(a, 2), rng.big_cell_point(a, 2)));
  });
  s.check("xi on the big cell", "xi is an involution; fixed points satisfy the reality conditions", [&](Tally& t) {
    for (int k = 0; k < 20; ++k) {
      BigCellPoint pt = rng.big_cell_point(a, 2);
      BigCellPoint x = xi_bigcell(pt, cfg);
      t(xi_bigcell(x, cfg) == pt);
      t(x.a == -pt.a.dagger() - pt.alpha.dagger() * pt.beta.dagger());
    }
  });
  s.check("real coordinates", "A' = A + (j/2) alpha^dag alpha is skew-hermitian on real points, 100 samples",
          [&](Tally& t) {
            for (int k = 0; k < 100; ++k) {
              LambdaMatrix m = rng.matrix(a, 2, 2, Parity::even, 2);
              LambdaMatrix a_prime = m - m.dagger();
              LambdaMatrix alpha = rng.matrix(a, 1, 2, Parity::odd, 2);
              BigCellPoint pt = from_real_coordinates({a_prime, alpha}, cfg);
              t(xi_bigcell(pt, cfg) == pt);
              t(pt.a == -pt.a.dagger() - j * (pt.alpha.dagger() * pt.alpha));
              t(pt.beta == (-j) * pt.alpha.dagger());
              RealCoordinates rc = real_coordinates(pt, cfg);
              t(rc.a_prime == a_prime && rc.alpha == alpha);
            }
          });
}

using SuiteFn = void (*)(const VerifyOptions&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"grassmann", grassmann_suite}, {"berezinian", berezinian_suite}, {"liesuper", liesuper_suite},
      {"realform", realform_suite},   {"geometry", geometry_suite},     {"superflag", superflag_suite}};
  return s;
}

}  // namespace

bool SuiteReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_verify(const std::string& suite, const VerifyOptions& options) {
  SuiteReport rep;
  bool found = false;
  for (const auto& [name, fn] : suites())
    if (suite == "all" || suite == name) {
      fn(options, rep);
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  return rep;
}

}  // namespace superspace
