#include "superspace/serialize.hpp"

#include "superspace/errors.hpp"
#include "superspace/expr.hpp"

namespace superspace {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what, 0); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational string");
}

std::string mask_string(Mask m, unsigned q) {
  std::string s(q, '0');
  for (unsigned k = 0; k < q; ++k)
    if (m & (Mask{1} << k)) s[k] = '1';
  return s;
}

Mask mask_from_string(const std::string& s, unsigned q) {
  if (s.size() != q) bad("mask \"" + s + "\" must have " + std::to_string(q) + " characters");
  Mask m = 0;
  for (unsigned k = 0; k < q; ++k) {
    if (s[k] == '1')
      m |= Mask{1} << k;
    else if (s[k] != '0')
      bad("mask \"" + s + "\" must be a bitstring");
  }
  return m;
}

void require_rows(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("expected " + std::to_string(rows) + " rows");
  for (const auto& r : j)
    if (!r.is_array() || r.size() != cols) bad("expected rows of length " + std::to_string(cols));
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const GaussianRational& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

Json algebra_json(const AlgebraPtr& algebra) { return {{"q", algebra->size()}, {"pairing", algebra->pairing()}}; }

Json terms_json(const SuperNumber& x) {
  Json terms = Json::array();
  const unsigned q = x.algebra()->size();
  for (const auto& t : x.terms())
    terms.push_back({{"mask", mask_string(t.mask, q)}, {"re", to_json(t.coeff.re())}, {"im", to_json(t.coeff.im())}});
  return {{"terms", terms}};
}

Json to_json(const SuperNumber& x) {
  Json j = algebra_json(x.algebra());
  j["terms"] = terms_json(x)["terms"];
  return j;
}

Json to_json(const LambdaMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(terms_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const SuperMatrix& m) {
  return {{"shape", {m.shape().m, m.shape().n}}, {"matrix", to_json(m.entries())}};
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const AlgebraElement& x) { return to_json(x.matrix()); }

Json to_json(const PluckerPoint& p) {
  Json out = Json::array();
  for (const auto& v : p.y) out.push_back(to_json(v));
  return out;
}

Json to_json(const BigCellPoint& pt) {
  return {{"A", to_json(pt.a)}, {"alpha", to_json(pt.alpha)}, {"beta", to_json(pt.beta)}};
}

Json to_json(const SuperPoincareElement& p) {
  return {{"L", to_json(p.l)},           {"R", to_json(p.r)},
          {"N", to_json(p.n)},           {"chi", to_json(p.chi)},
          {"varphi", to_json(p.varphi)}, {"d", terms_json(p.d)}};
}

Json to_json(const SuperDimension& d) { return {{"even", d.even}, {"odd", d.odd}}; }

AlgebraPtr algebra_from_json(const Json& j) {
  const Json& q = field(j, "q");
  if (!q.is_number_unsigned() || q.get<unsigned>() > GrassmannAlgebra::kMaxGenerators) bad("bad generator count");
  std::vector<unsigned> pairing;
  if (j.contains("pairing")) {
    for (const auto& v : j.at("pairing")) {
      if (!v.is_number_unsigned()) bad("pairing entries must be generator indices");
      pairing.push_back(v.get<unsigned>());
    }
  } else {
    for (unsigned k = 1; k <= q.get<unsigned>(); ++k) pairing.push_back(k);
  }
  try {
    return GrassmannAlgebra::make(q.get<unsigned>(), std::move(pairing));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

GaussianRational scalar_from_json(const Json& j, ScalarForm form) {
  if (form == ScalarForm::expr) {
    if (!j.is_string()) bad("expected an expression string");
    return parse_scalar(j.get<std::string>());
  }
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  if (!j.is_object()) bad("expected {\"re\", \"im\"}");
  Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
  Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
  return {re, im};
}

SuperNumber supernumber_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form) {
  if (form == ScalarForm::expr) {
    if (!j.is_string()) bad("expected an expression string");
    return parse_expr(j.get<std::string>(), algebra);
  }
  if (j.is_number_integer()) return SuperNumber(algebra, GaussianRational(j.get<long>()));
  if (j.is_object() && !j.contains("terms") && j.contains("re"))
    return SuperNumber(algebra, scalar_from_json(j, ScalarForm::json));
  if (j.contains("q") && !same_algebra(algebra_from_json(j), algebra)) throw AlgebraMismatch();
  std::vector<SuperNumber::Term> terms;
  for (const auto& t : field(j, "terms")) {
    Mask m = mask_from_string(field(t, "mask").get<std::string>(), algebra->size());
    terms.push_back({m, scalar_from_json(t, ScalarForm::json)});
  }
  return SuperNumber::from_terms(algebra, std::move(terms));
}

LambdaMatrix lambda_matrix_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form, std::size_t rows,
                                     std::size_t cols) {
  require_rows(j, rows, cols);
  LambdaMatrix m(algebra, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = supernumber_from_json(j[r][c], algebra, form);
  return m;
}

SuperMatrix supermatrix_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form) {
  BlockShape shape = kConformalShape;
  if (j.is_object() && j.contains("shape")) {
    const Json& s = j.at("shape");
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer() ||
        s[0].get<long>() < 0 || s[1].get<long>() < 0)
      bad("shape must be [m, n]");
    shape = {s[0].get<unsigned>(), s[1].get<unsigned>()};
  }
  const Json& rows = j.is_object() ? field(j, "matrix") : j;
  LambdaMatrix e = lambda_matrix_from_json(rows, algebra, form, shape.dim(), shape.dim());
  return SuperMatrix(std::move(e), shape, MatrixParity::even);
}

ComplexMatrix complex_matrix_from_json(const Json& j, ScalarForm form, std::size_t rows, std::size_t cols) {
  require_rows(j, rows, cols);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], form);
  return m;
}

AlgebraElement algebra_element_from_json(const Json& j, ScalarForm form) {
  return AlgebraElement(complex_matrix_from_json(j, form, kConformalDim, kConformalDim));
}

PluckerPoint plucker_from_json(const Json& j, ScalarForm form) {
  if (!j.is_array() || j.size() != 6) bad("expected six Pluecker coordinates");
  PluckerPoint p;
  for (std::size_t k = 0; k < 6; ++k) p.y[k] = scalar_from_json(j[k], form);
  return p;
}

BigCellPoint big_cell_point_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form) {
  BigCellPoint pt{lambda_matrix_from_json(field(j, "A"), algebra, form, 2, 2),
                  lambda_matrix_from_json(field(j, "alpha"), algebra, form, 1, 2),
                  lambda_matrix_from_json(field(j, "beta"), algebra, form, 2, 1)};
  pt.validate();
  return pt;
}

SuperPoincareElement super_poincare_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form) {
  SuperPoincareElement p{lambda_matrix_from_json(field(j, "L"), algebra, form, 2, 2),
                         lambda_matrix_from_json(field(j, "R"), algebra, form, 2, 2),
                         lambda_matrix_from_json(field(j, "N"), algebra, form, 2, 2),
                         lambda_matrix_from_json(field(j, "chi"), algebra, form, 2, 1),
                         lambda_matrix_from_json(field(j, "varphi"), algebra, form, 1, 2),
                         supernumber_from_json(field(j, "d"), algebra, form)};
  p.validate();
  return p;
}

}  // namespace superspace
