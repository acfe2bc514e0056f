#pragma once

// The Lie superalgebra gl(4|1) and its subalgebra sl(4|1).
//
// Elements are complex 5x5 matrices; the grading comes from position: entry
// (i, j) is odd iff exactly one of i, j is the last index. Inside sl(4|1) the
// Poincare superalgebra p and the translation superalgebra n are the
// complementary block patterns
//
//        [ L 0 0 ]          [ 0 A g ]
//    p = [ M R a ]      n = [ 0 0 0 ]      c = tr L + tr R,
//        [ b 0 c ]          [ 0 d 0 ]
//
// with g a 2x1 column in the last column and d a 1x2 row in the last row.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superspace/dense_matrix.hpp"
#include "superspace/supermatrix.hpp"

namespace superspace {

inline constexpr BlockShape kConformalShape{4, 1};
inline constexpr std::size_t kConformalDim = 5;

class AlgebraElement {
 public:
  AlgebraElement() : m_(kConformalDim, kConformalDim) {}
  explicit AlgebraElement(ComplexMatrix m);
  // Requires shape 4|1 and scalar (body-only) entries.
  explicit AlgebraElement(const SuperMatrix& m);

  // E_ij with 1-based indices.
  static AlgebraElement elementary(std::size_t i, std::size_t j, GaussianRational c = 1);

  const ComplexMatrix& matrix() const { return m_; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  SuperMatrix to_supermatrix(const AlgebraPtr& algebra) const;

  static bool is_odd_position(std::size_t i, std::size_t j) {
    return (i == kConformalDim - 1) != (j == kConformalDim - 1);
  }

  // From the support; zero reports even.
  Parity parity() const;
  AlgebraElement even_part() const;
  AlgebraElement odd_part() const;

  GaussianRational supertrace() const;
  bool in_sl() const { return supertrace().is_zero(); }
  bool is_zero() const { return m_.is_zero_matrix(); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return AlgebraElement(a.m_ + b.m_);
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return AlgebraElement(a.m_ - b.m_);
  }
  friend AlgebraElement operator*(const GaussianRational& c, const AlgebraElement& a) {
    return AlgebraElement(c * a.m_);
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.m_ == b.m_; }

 private:
  ComplexMatrix m_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);

// I + eps X over the algebra of two self-conjugate odd generators e1, e2 with
// eps = e1 e2, so eps^2 = 0 and bar(eps) = eps. The eps-coefficient of a
// polynomial expression in this matrix is its first-order part.
inline constexpr Mask kEpsilonMask = 0b11;
SuperMatrix first_order_element(const AlgebraElement& x);

// [X, Y] = XY - (-1)^{|X||Y|} YX on homogeneous parts, extended bilinearly.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// The 25 elementary matrices E_ij of gl(4|1), row-major.
std::vector<AlgebraElement> gl_basis();
// sl(4|1): the 20 off-diagonal E_ij followed by E_kk + E_55, k = 1..4.
std::vector<AlgebraElement> sl_basis();

enum class PatternName { p, n, n0, n1, l0, h, p1, p2, p3, p4 };

std::string to_string(PatternName name);
PatternName parse_pattern_name(const std::string& s);

// A block pattern inside sl(4|1): allowed positions plus the supertrace
// constraint.
struct SubspacePattern {
  PatternName name;
  std::array<std::array<bool, kConformalDim>, kConformalDim> mask{};

  bool allows(std::size_t i, std::size_t j) const { return mask[i][j]; }
};

SubspacePattern pattern(PatternName name);

bool subspace_membership(const AlgebraElement& x, const SubspacePattern& s);

// Basis of the pattern intersected with sl(4|1), even elements first.
std::vector<AlgebraElement> pattern_basis(const SubspacePattern& s);

struct SuperDimension {
  std::size_t even = 0;
  std::size_t odd = 0;
  friend bool operator==(const SuperDimension&, const SuperDimension&) = default;
};

SuperDimension pattern_dimension(const SubspacePattern& s);

// Every bracket of basis elements stays in the pattern.
bool closed_under_bracket(const SubspacePattern& s);

// Returns (X_p, X_n). Throws std::invalid_argument unless X is in sl(4|1).
std::pair<AlgebraElement, AlgebraElement> split_pn(const AlgebraElement& x);

struct TranslationReport {
  bool even_abelian = false;          // [S0, S0] = 0
  bool even_acts_trivially = false;   // [S0, S1] = 0
  bool odd_bracket_in_even = false;   // [S1, S1] in S0
  bool odd_bracket_nonzero = false;   // [S1, S1] != 0
  SuperDimension dims;
  bool dims_are_4_4() const { return dims.even == 4 && dims.odd == 4; }
  bool passed() const {
    return even_abelian && even_acts_trivially && odd_bracket_in_even && odd_bracket_nonzero && dims_are_4_4();
  }
};

TranslationReport verify_translation_algebra(const SubspacePattern& s);

// Linear functional a_i - a_j on the diagonal Cartan subalgebra.
struct Root {
  std::array<int, kConformalDim> coefficients{};

  // a_i - a_j, 1-based.
  static Root difference(std::size_t i, std::size_t j);
  // Indices (1-based) of the +1 and -1 coefficient.
  std::pair<std::size_t, std::size_t> indices() const;
  std::string to_string() const;

  friend auto operator<=>(const Root&, const Root&) = default;
};

struct RootDecomposition {
  std::array<GaussianRational, kConformalDim> cartan;
  std::map<Root, AlgebraElement> components;
};

// X = diag(cartan) + sum of root components; the component for a_i - a_j is
// X_ij E_ij.
RootDecomposition root_decomposition(const AlgebraElement& x);

// Roots whose root space lies in the pattern.
std::vector<Root> pattern_roots(const SubspacePattern& s);

// The n1 element with odd blocks g (2x1, rows 1-2 of the last column) and
// d (1x2, columns 3-4 of the last row).
AlgebraElement odd_translation(const ComplexMatrix& gamma, const ComplexMatrix& delta);
std::pair<ComplexMatrix, ComplexMatrix> odd_translation_blocks(const AlgebraElement& x);
AlgebraElement even_translation(const ComplexMatrix& a);
ComplexMatrix translation_block(const AlgebraElement& x);

// (g, d) -> (x g, d y^{-1}). Throws NotInvertible when x or y is singular.
std::pair<ComplexMatrix, ComplexMatrix> lorentz_act(const ComplexMatrix& x, const ComplexMatrix& y,
                                                    const ComplexMatrix& gamma, const ComplexMatrix& delta);

// diag(x, y, 1) X diag(x^{-1}, y^{-1}, 1).
AlgebraElement lorentz_conjugate(const ComplexMatrix& x, const ComplexMatrix& y, const AlgebraElement& element);

// Superbracket of two n1 elements; lands in n0 with A-block g d' + g' d.
// Throws PatternViolation when an argument is not in n1.
AlgebraElement odd_pair(const AlgebraElement& a, const AlgebraElement& b);

// det of the A-block of an n0 element.
GaussianRational q_form(const AlgebraElement& n0_element);

}  // namespace superspace
