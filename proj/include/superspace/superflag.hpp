#pragma once

// The big cell of the flag supermanifold F(2|0, 2|1; 4|1).
//
// A point (A, alpha, beta) has the unipotent representative
//     u = [[1, 0, 0], [A, 1, beta], [alpha, 0, 1]]
// in block rows/columns of sizes 2, 2, 1. For g in SL(4|1) written as
//     Z = g[1-2, 1-2], W = g[3-4, 1-2], rho1 = g[5, 1-2],
//     tau1 = g[1-2, 5], tau2 = g[3-4, 5]
// the chart is
//     pi(g) = (W Z^{-1}, rho1 Z^{-1}, (tau2 - W Z^{-1} tau1) d),
//     d = (g55 - rho1 Z^{-1} tau1)^{-1}.

#include <array>
#include <optional>

#include "superspace/liesuper.hpp"
#include "superspace/realform.hpp"
#include "superspace/supermatrix.hpp"

namespace superspace {

struct BigCellPoint {
  LambdaMatrix a;      // 2x2, even
  LambdaMatrix alpha;  // 1x2, odd
  LambdaMatrix beta;   // 2x1, odd

  static BigCellPoint origin(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const { return a.algebra(); }
  // Shapes and entry parities as above.
  bool well_formed() const;
  // Throws ShapeMismatch or ParityError.
  void validate() const;

  SuperMatrix unipotent() const;

  friend bool operator==(const BigCellPoint&, const BigCellPoint&) = default;
};

// [[L, 0, 0], [N L, R, R chi], [d varphi, 0, d]].
struct SuperPoincareElement {
  LambdaMatrix l;       // 2x2 even
  LambdaMatrix r;       // 2x2 even
  LambdaMatrix n;       // 2x2 even
  LambdaMatrix chi;     // 2x1 odd
  LambdaMatrix varphi;  // 1x2 odd
  SuperNumber d;        // even

  static SuperPoincareElement identity(const AlgebraPtr& algebra);
  // Throws PatternViolation unless g has the block pattern above, and
  // NotInvertible when L, R or d is not invertible.
  static SuperPoincareElement from_matrix(const SuperMatrix& g);

  const AlgebraPtr& algebra() const { return l.algebra(); }
  void validate() const;
  SuperMatrix matrix() const;

  friend bool operator==(const SuperPoincareElement&, const SuperPoincareElement&) = default;
};

// Charts on G(2|0; 4|1) and G(2|1; 4|1) of the two members of a flag.
struct FlagChartPair {
  LambdaMatrix a_g1;      // 2x2
  LambdaMatrix alpha_g1;  // 1x2
  LambdaMatrix b;         // 2x2
  LambdaMatrix beta2;     // 2x1
};

// A_G1 = B + beta2 alpha_G1.
bool twistor_check(const FlagChartPair& pair);

// Throws NotInBigCell when Z (or the 2|1 minor) has a singular body.
BigCellPoint pi_chart(const SuperMatrix& g);

// Both charts of the flag of g, the 2|1 chart computed by inverting the
// minor on rows/columns 1, 2, 5 directly.
FlagChartPair flag_charts(const SuperMatrix& g);

//   A     -> R (A + chi alpha) L^{-1} + N
//   alpha -> d (alpha + varphi) L^{-1}
//   beta  -> d^{-1} R (beta + chi)
BigCellPoint superpoincare_act(const SuperPoincareElement& p, const BigCellPoint& pt);

// Acting by p2 then p1 agrees with acting by the matrix product p1 p2.
bool act_homomorphism_check(const SuperPoincareElement& p1, const SuperPoincareElement& p2, const BigCellPoint& pt);

// W, rho1 and tau2 vanish: the stabilizer of the base flag.
bool stabilizer_membership(const SuperMatrix& g);

// pi of xi_group applied to the unipotent representative.
BigCellPoint xi_bigcell(const BigCellPoint& pt, const ConjugationConfig& cfg);

struct RealCoordinates {
  LambdaMatrix a_prime;  // A + (j/2) alpha^dag alpha
  LambdaMatrix alpha;
};

RealCoordinates real_coordinates(const BigCellPoint& pt, const ConjugationConfig& cfg);
// The inverse construction: (A' - (j/2) alpha^dag alpha, alpha, -j alpha^dag).
BigCellPoint from_real_coordinates(const RealCoordinates& rc, const ConjugationConfig& cfg);
// A' = -A'^dag and beta = -j alpha^dag.
bool is_real_point(const BigCellPoint& pt, const ConjugationConfig& cfg);

struct InvarianceReport {
  bool invariant = false;
  // A big-cell point whose image under g leaves the cell, when not invariant.
  std::optional<BigCellPoint> witness;
};

// Whether g maps every big-cell point into the big cell. On the body level
// the new Z block is g11 + g12 A and the new 2|1 denominator is g55, so the
// cell is preserved iff body(g11) is invertible, body(g12) = 0 and
// body(g55) != 0.
InvarianceReport big_cell_invariance_check(const SuperMatrix& g);
InvarianceReport big_cell_invariance_check(const SuperPoincareElement& p);

// First-order part of pi(I + eps X) at the identity, as the 8 coordinates
// (A11, A12, A21, A22, alpha1, alpha2, beta1, beta2).
std::array<GaussianRational, 8> pi_differential(const AlgebraElement& x);

}  // namespace superspace
