#pragma once

// Text input for supernumbers.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | 'i' | 'x' INT | 'bx' INT | '(' expr ')' | '-' factor
//   number := INT ['/' INT] ['i']
//
// bx<k> is the conjugate partner of x<k>. Products keep the written order, so
// "x2*x1" reads as -x1*x2. Everything SuperNumber::to_string prints is
// accepted.

#include <string_view>

#include "superspace/grassmann.hpp"

namespace superspace {

// Throws ParseError (with the offending position) on bad syntax or a
// generator index outside 1..q.
SuperNumber parse_expr(std::string_view text, const AlgebraPtr& algebra);

// A plain complex number in the same syntax; generators are rejected.
GaussianRational parse_scalar(std::string_view text);

}  // namespace superspace
