#include "superspace/liesuper.hpp"

#include <ostream>
#include <stdexcept>

#include "superspace/errors.hpp"

namespace superspace {

namespace {

constexpr std::size_t N = kConformalDim;

void require_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeMismatch(std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

AlgebraElement::AlgebraElement(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != N || m_.cols() != N) throw ShapeMismatch("gl(4|1) elements are 5x5");
}

AlgebraElement::AlgebraElement(const SuperMatrix& m) : m_(N, N) {
  if (!(m.shape() == kConformalShape)) throw ShapeMismatch("gl(4|1) elements have block shape 4|1");
  if (!m.entries().is_scalar()) throw std::invalid_argument("gl(4|1) elements have scalar entries");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m_(i, j) = m(i, j).body();
}

AlgebraElement AlgebraElement::elementary(std::size_t i, std::size_t j, GaussianRational c) {
  if (i < 1 || i > N || j < 1 || j > N) throw std::out_of_range("elementary matrix index out of range");
  ComplexMatrix m(N, N);
  m(i - 1, j - 1) = std::move(c);
  return AlgebraElement(std::move(m));
}

SuperMatrix AlgebraElement::to_supermatrix(const AlgebraPtr& algebra) const {
  LambdaMatrix e(algebra, N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e(i, j) = SuperNumber(algebra, m_(i, j));
  return SuperMatrix(std::move(e), kConformalShape, MatrixParity::inhomogeneous);
}

SuperMatrix first_order_element(const AlgebraElement& x) {
  const AlgebraPtr dual = GrassmannAlgebra::real(2);
  LambdaMatrix g = LambdaMatrix::identity(dual, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!x(i, j).is_zero()) g(i, j) += SuperNumber::monomial(dual, kEpsilonMask, x(i, j));
  return SuperMatrix(std::move(g), kConformalShape, MatrixParity::inhomogeneous);
}

Parity AlgebraElement::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (m_(i, j).is_zero()) continue;
      (is_odd_position(i, j) ? has_odd : has_even) = true;
    }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

AlgebraElement AlgebraElement::even_part() const {
  ComplexMatrix out = m_;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (is_odd_position(i, j)) out(i, j) = GaussianRational();
  return AlgebraElement(std::move(out));
}

AlgebraElement AlgebraElement::odd_part() const {
  ComplexMatrix out = m_;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!is_odd_position(i, j)) out(i, j) = GaussianRational();
  return AlgebraElement(std::move(out));
}

GaussianRational AlgebraElement::supertrace() const {
  GaussianRational t;
  for (std::size_t i = 0; i + 1 < N; ++i) t += m_(i, i);
  return t - m_(N - 1, N - 1);
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) {
  os << "[";
  for (std::size_t i = 0; i < N; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < N; ++j) os << (j ? ", " : "") << x(i, j);
    os << "]";
  }
  return os << "]";
}

// ---------------------------------------------------------------------------

namespace {

ComplexMatrix homogeneous_bracket(const ComplexMatrix& x, const ComplexMatrix& y, bool both_odd) {
  ComplexMatrix xy = x * y;
  ComplexMatrix yx = y * x;
  return both_odd ? xy + yx : xy - yx;
}

}  // namespace

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  const AlgebraElement parts_x[2] = {x.even_part(), x.odd_part()};
  const AlgebraElement parts_y[2] = {y.even_part(), y.odd_part()};
  ComplexMatrix out(N, N);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (parts_x[a].is_zero() || parts_y[b].is_zero()) continue;
      out = out + homogeneous_bracket(parts_x[a].matrix(), parts_y[b].matrix(), a == 1 && b == 1);
    }
  return AlgebraElement(std::move(out));
}

std::vector<AlgebraElement> gl_basis() {
  std::vector<AlgebraElement> out;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) out.push_back(AlgebraElement::elementary(i, j));
  return out;
}

std::vector<AlgebraElement> sl_basis() {
  std::vector<AlgebraElement> out;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      if (i != j) out.push_back(AlgebraElement::elementary(i, j));
  for (std::size_t k = 1; k < N; ++k)
    out.push_back(AlgebraElement::elementary(k, k) + AlgebraElement::elementary(N, N));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(PatternName name) {
  switch (name) {
    case PatternName::p: return "p";
    case PatternName::n: return "n";
    case PatternName::n0: return "n0";
    case PatternName::n1: return "n1";
    case PatternName::l0: return "l0";
    case PatternName::h: return "h";
    case PatternName::p1: return "p1";
    case PatternName::p2: return "p2";
    case PatternName::p3: return "p3";
    case PatternName::p4: return "p4";
  }
  return "?";
}

PatternName parse_pattern_name(const std::string& s) {
  for (PatternName p : {PatternName::p, PatternName::n, PatternName::n0, PatternName::n1, PatternName::l0,
                        PatternName::h, PatternName::p1, PatternName::p2, PatternName::p3, PatternName::p4})
    if (to_string(p) == s) return p;
  throw std::invalid_argument("unknown pattern '" + s + "'");
}

SubspacePattern pattern(PatternName name) {
  SubspacePattern s{name, {}};
  // 0-based rows/columns; blocks are {0,1}, {2,3}, {4}.
  auto allow = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    for (std::size_t i = r0; i <= r1; ++i)
      for (std::size_t j = c0; j <= c1; ++j) s.mask[i][j] = true;
  };
  switch (name) {
    case PatternName::p:
      allow(0, 1, 0, 1);  // L
      allow(2, 3, 0, 1);  // M
      allow(2, 3, 2, 3);  // R
      allow(2, 3, 4, 4);  // odd column
      allow(4, 4, 0, 1);  // odd row
      allow(4, 4, 4, 4);  // c
      break;
    case PatternName::n:
      allow(0, 1, 2, 3);  // A
      allow(0, 1, 4, 4);  // gamma
      allow(4, 4, 2, 3);  // delta
      break;
    case PatternName::n0:
      allow(0, 1, 2, 3);
      break;
    case PatternName::n1:
      allow(0, 1, 4, 4);
      allow(4, 4, 2, 3);
      break;
    case PatternName::l0:
      allow(0, 1, 0, 1);
      allow(2, 3, 2, 3);
      break;
    case PatternName::h:
      for (std::size_t i = 0; i < N; ++i) s.mask[i][i] = true;
      break;
    case PatternName::p1:
      allow(0, 1, 0, 1);
      allow(2, 3, 0, 3);
      allow(4, 4, 0, 4);
      break;
    case PatternName::p2:
      allow(0, 1, 0, 1);
      allow(2, 3, 0, 3);
      allow(3, 3, 4, 4);
      allow(4, 4, 0, 2);
      allow(4, 4, 4, 4);
      break;
    case PatternName::p3:
      allow(0, 1, 0, 1);
      allow(1, 1, 4, 4);
      allow(2, 3, 0, 4);
      allow(4, 4, 0, 0);
      allow(4, 4, 4, 4);
      break;
    case PatternName::p4:
      allow(0, 1, 0, 1);
      allow(0, 1, 4, 4);
      allow(2, 3, 0, 4);
      allow(4, 4, 4, 4);
      break;
  }
  return s;
}

bool subspace_membership(const AlgebraElement& x, const SubspacePattern& s) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!s.allows(i, j) && !x(i, j).is_zero()) return false;
  return x.in_sl();
}

std::vector<AlgebraElement> pattern_basis(const SubspacePattern& s) {
  std::vector<AlgebraElement> even;
  std::vector<AlgebraElement> odd;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j || !s.allows(i, j)) continue;
      (AlgebraElement::is_odd_position(i, j) ? odd : even).push_back(AlgebraElement::elementary(i + 1, j + 1));
    }
  // Diagonal part: kernel of the supertrace restricted to allowed positions.
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < N; ++i)
    if (s.allows(i, i)) diag.push_back(i);
  if (!diag.empty()) {
    RationalMatrix str(1, diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) str(0, k) = diag[k] + 1 == N ? -1 : 1;
    for (const auto& v : str.nullspace()) {
      ComplexMatrix m(N, N);
      for (std::size_t k = 0; k < diag.size(); ++k) m(diag[k], diag[k]) = GaussianRational(v[k]);
      even.push_back(AlgebraElement(std::move(m)));
    }
  }
  even.insert(even.end(), odd.begin(), odd.end());
  return even;
}

SuperDimension pattern_dimension(const SubspacePattern& s) {
  SuperDimension d;
  for (const auto& b : pattern_basis(s)) (b.parity() == Parity::odd ? d.odd : d.even)++;
  return d;
}

bool closed_under_bracket(const SubspacePattern& s) {
  auto basis = pattern_basis(s);
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!subspace_membership(bracket(x, y), s)) return false;
  return true;
}

std::pair<AlgebraElement, AlgebraElement> split_pn(const AlgebraElement& x) {
  if (!x.in_sl()) throw std::invalid_argument("split_pn needs an element of sl(4|1)");
  const SubspacePattern p = pattern(PatternName::p);
  ComplexMatrix xp(N, N);
  ComplexMatrix xn(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) (p.allows(i, j) ? xp : xn)(i, j) = x(i, j);
  return {AlgebraElement(std::move(xp)), AlgebraElement(std::move(xn))};
}

TranslationReport verify_translation_algebra(const SubspacePattern& s) {
  std::vector<AlgebraElement> even;
  std::vector<AlgebraElement> odd;
  for (auto& b : pattern_basis(s)) (b.parity() == Parity::odd ? odd : even).push_back(std::move(b));

  // S0 as a pattern of its own: the even allowed positions.
  SubspacePattern s0 = s;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (AlgebraElement::is_odd_position(i, j)) s0.mask[i][j] = false;

  TranslationReport r;
  r.dims = {even.size(), odd.size()};
  r.even_abelian = true;
  for (const auto& a : even)
    for (const auto& b : even)
      if (!bracket(a, b).is_zero()) r.even_abelian = false;
  r.even_acts_trivially = true;
  for (const auto& a : even)
    for (const auto& b : odd)
      if (!bracket(a, b).is_zero()) r.even_acts_trivially = false;
  r.odd_bracket_in_even = true;
  r.odd_bracket_nonzero = false;
  for (const auto& a : odd)
    for (const auto& b : odd) {
      AlgebraElement c = bracket(a, b);
      if (!c.is_zero()) r.odd_bracket_nonzero = true;
      if (!subspace_membership(c, s0)) r.odd_bracket_in_even = false;
    }
  return r;
}

// ---------------------------------------------------------------------------

Root Root::difference(std::size_t i, std::size_t j) {
  if (i == j || i < 1 || j < 1 || i > N || j > N) throw std::invalid_argument("roots are a_i - a_j with i != j");
  Root r;
  r.coefficients[i - 1] = 1;
  r.coefficients[j - 1] = -1;
  return r;
}

std::pair<std::size_t, std::size_t> Root::indices() const {
  std::size_t plus = 0;
  std::size_t minus = 0;
  for (std::size_t k = 0; k < N; ++k) {
    if (coefficients[k] == 1) plus = k + 1;
    if (coefficients[k] == -1) minus = k + 1;
  }
  return {plus, minus};
}

std::string Root::to_string() const {
  auto [i, j] = indices();
  return "a" + std::to_string(i) + "-a" + std::to_string(j);
}

RootDecomposition root_decomposition(const AlgebraElement& x) {
  RootDecomposition d;
  for (std::size_t i = 0; i < N; ++i) d.cartan[i] = x(i, i);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j || x(i, j).is_zero()) continue;
      d.components.emplace(Root::difference(i + 1, j + 1), AlgebraElement::elementary(i + 1, j + 1, x(i, j)));
    }
  return d;
}

std::vector<Root> pattern_roots(const SubspacePattern& s) {
  std::vector<Root> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && s.allows(i, j)) out.push_back(Root::difference(i + 1, j + 1));
  return out;
}

// ---------------------------------------------------------------------------

AlgebraElement odd_translation(const ComplexMatrix& gamma, const ComplexMatrix& delta) {
  require_shape(gamma, 2, 1, "gamma");
  require_shape(delta, 1, 2, "delta");
  ComplexMatrix m(N, N);
  m.set_block(0, 4, gamma);
  m.set_block(4, 2, delta);
  return AlgebraElement(std::move(m));
}

std::pair<ComplexMatrix, ComplexMatrix> odd_translation_blocks(const AlgebraElement& x) {
  return {x.matrix().block(0, 4, 2, 1), x.matrix().block(4, 2, 1, 2)};
}

AlgebraElement even_translation(const ComplexMatrix& a) {
  require_shape(a, 2, 2, "A");
  ComplexMatrix m(N, N);
  m.set_block(0, 2, a);
  return AlgebraElement(std::move(m));
}

ComplexMatrix translation_block(const AlgebraElement& x) { return x.matrix().block(0, 2, 2, 2); }

std::pair<ComplexMatrix, ComplexMatrix> lorentz_act(const ComplexMatrix& x, const ComplexMatrix& y,
                                                    const ComplexMatrix& gamma, const ComplexMatrix& delta) {
  require_shape(x, 2, 2, "x");
  require_shape(y, 2, 2, "y");
  require_shape(gamma, 2, 1, "gamma");
  require_shape(delta, 1, 2, "delta");
  if (x.determinant().is_zero()) throw NotInvertible("Lorentz factor x");
  return {x * gamma, delta * y.inverse()};
}

AlgebraElement lorentz_conjugate(const ComplexMatrix& x, const ComplexMatrix& y, const AlgebraElement& element) {
  require_shape(x, 2, 2, "x");
  require_shape(y, 2, 2, "y");
  ComplexMatrix g(N, N);
  ComplexMatrix g_inv(N, N);
  g.set_block(0, 0, x);
  g.set_block(2, 2, y);
  g(4, 4) = 1;
  g_inv.set_block(0, 0, x.inverse());
  g_inv.set_block(2, 2, y.inverse());
  g_inv(4, 4) = 1;
  return AlgebraElement(g * element.matrix() * g_inv);
}

AlgebraElement odd_pair(const AlgebraElement& a, const AlgebraElement& b) {
  const SubspacePattern n1 = pattern(PatternName::n1);
  if (!subspace_membership(a, n1) || !subspace_membership(b, n1))
    throw PatternViolation("odd_pair arguments must lie in n1");
  return bracket(a, b);
}

GaussianRational q_form(const AlgebraElement& n0_element) {
  if (!subspace_membership(n0_element, pattern(PatternName::n0)))
    throw PatternViolation("q is defined on n0");
  return translation_block(n0_element).determinant();
}

}  // namespace superspace
