#pragma once

// Defaults read from a plain "key = value" file (superspace.toml). Blank
// lines and '#' comments are ignored; values may be quoted.
//
//   j_sign    = "-i"
//   seed      = 0
//   algebra_q = 8

#include <cstdint>
#include <string>
#include <string_view>

#include "superspace/grassmann.hpp"
#include "superspace/realform.hpp"

namespace superspace {

struct Settings {
  JSign j_sign = JSign::minus_i;
  std::uint64_t seed = 0;
  unsigned algebra_q = 8;
};

// Throws ParseError (position = line number) on unknown keys or bad values.
Settings parse_config(std::string_view text, Settings base = {});
Settings load_config(const std::string& path, Settings base = {});

// paired(q/2) for even q, otherwise q self-conjugate generators.
AlgebraPtr default_algebra(unsigned q);

}  // namespace superspace
