#pragma once

// Conjugations defining the real forms.
//
// On the Lie superalgebra, with X = [[X4, mu], [nu, x]] (mu a column, nu a row)
//     sigma(X) = [[-F X4^dag F, i F nu^dag], [i mu^dag F, -conj(x)]],
// F = [[0, I2], [I2, 0]]. On the supergroup, g = [[D, tau], [rho, d]] maps to
//     g^theta = [[D^dag, j rho^dag], [j tau^dag, bar d]],
//     g^xi    = L (g^theta)^{-1} L,     L = diag(F, 1),
// where j is +i or -i. Only j = -i makes the differential of xi at the
// identity equal to sigma on the odd part; that is the default here.

#include <string>
#include <vector>

#include "superspace/dense_matrix.hpp"
#include "superspace/liesuper.hpp"
#include "superspace/supermatrix.hpp"

namespace superspace {

enum class JSign { plus_i, minus_i };

std::string to_string(JSign j);
// Accepts "+i", "i", "-i".
JSign parse_j_sign(const std::string& s);

struct ConjugationConfig {
  JSign j_sign = JSign::minus_i;

  GaussianRational j() const;
  static ComplexMatrix F();
  static ComplexMatrix L();
};

AlgebraElement sigma(const AlgebraElement& x);

// Real basis of the sigma-fixed part of sl(4|1), even elements first.
std::vector<AlgebraElement> sigma_fixed_basis();
SuperDimension sigma_fixed_dimension();

// The entries of g may have any parity; only the block formula is applied.
// Throws NotInvertible when the body of g is singular.
SuperMatrix theta_group(const SuperMatrix& g, const ConjugationConfig& cfg);
SuperMatrix xi_group(const SuperMatrix& g, const ConjugationConfig& cfg);

// First-order part of xi(I + eps X), eps = e1 e2 a nilpotent real parameter
// built from two extra self-conjugate odd generators.
AlgebraElement xi_differential(const AlgebraElement& x, const ConjugationConfig& cfg);

// The j for which xi_differential agrees with sigma on every basis element.
JSign bootstrap_j_sign();

// Reality conditions for an element of the super Poincare group
//     [[L, 0, 0], [M, R, R chi], [d phi, 0, d]].
struct PoincareRealityReport {
  bool l_condition = false;       // L = (R^dag)^{-1}
  bool chi_condition = false;     // chi = -j phi^dag
  bool m_condition = false;       // M L^{-1} = -(M L^{-1})^dag - j L^{dag -1} phi^dag phi L^{-1}
  bool d_condition = false;       // d bar(d) = 1
  LambdaMatrix shifted_translation;  // M L^{-1} + (j/2) L^{dag -1} phi^dag phi L^{-1}
  bool shifted_skew_hermitian = false;
  bool fixed_by_xi = false;       // xi_group(g) == g, checked directly

  bool displayed_conditions() const { return l_condition && chi_condition && m_condition; }
};

// Throws PatternViolation when g is not in the super Poincare pattern.
PoincareRealityReport reality_conditions_poincare(const SuperMatrix& g, const ConjugationConfig& cfg);

}  // namespace superspace
