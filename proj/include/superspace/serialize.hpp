#pragma once

// Canonical JSON for the library's values. Objects use sorted keys and
// rationals print in lowest terms as strings, so equal values serialize to
// identical text.
//
//   GaussianRational  {"im": "0", "re": "1/2"}
//   SuperNumber       {"pairing": [..], "q": 8, "terms": [{"im", "mask", "re"}]}
//                     mask is a bitstring whose k-th character stands for x_{k+1}
//   matrices          arrays of rows
//   PluckerPoint      [y12, y23, y31, y14, y24, y34]
//
// On input, scalar leaves are read in one of two forms: JSON mode takes the
// objects above (or a bare integer), expression mode takes strings parsed by
// parse_expr. Matrix entries inside a document share the document's algebra,
// so they carry only "terms".

#include <json.hpp>

#include "superspace/geometry.hpp"
#include "superspace/liesuper.hpp"
#include "superspace/superflag.hpp"
#include "superspace/supermatrix.hpp"

namespace superspace {

using Json = nlohmann::json;

enum class ScalarForm { json, expr };

Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json algebra_json(const AlgebraPtr& algebra);
// Standalone, with the algebra.
Json to_json(const SuperNumber& x);
// Terms only, for entries of a larger document.
Json terms_json(const SuperNumber& x);
Json to_json(const LambdaMatrix& m);
Json to_json(const SuperMatrix& m);
Json to_json(const ComplexMatrix& m);
Json to_json(const AlgebraElement& x);
Json to_json(const PluckerPoint& p);
Json to_json(const BigCellPoint& pt);
Json to_json(const SuperPoincareElement& p);
Json to_json(const SuperDimension& d);

// Throws ParseError for malformed documents.
AlgebraPtr algebra_from_json(const Json& j);
GaussianRational scalar_from_json(const Json& j, ScalarForm form);
SuperNumber supernumber_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form);
LambdaMatrix lambda_matrix_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form,
                                     std::size_t rows, std::size_t cols);
// {"shape": [m, n], "matrix": [[..]]}; the shape defaults to 4|1.
SuperMatrix supermatrix_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form);
ComplexMatrix complex_matrix_from_json(const Json& j, ScalarForm form, std::size_t rows, std::size_t cols);
AlgebraElement algebra_element_from_json(const Json& j, ScalarForm form);
PluckerPoint plucker_from_json(const Json& j, ScalarForm form);
BigCellPoint big_cell_point_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form);
SuperPoincareElement super_poincare_from_json(const Json& j, const AlgebraPtr& algebra, ScalarForm form);

}  // namespace superspace
