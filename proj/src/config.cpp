#include "superspace/config.hpp"

#include <fstream>
#include <sstream>

#include "superspace/errors.hpp"

namespace superspace {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

std::uint64_t parse_unsigned(const std::string& v, std::size_t line) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer, got \"" + v + "\"", line);
  try {
    return std::stoull(v);
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range", line);
  }
}

}  // namespace

Settings parse_config(std::string_view text, Settings base) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line);
    std::string key = trim(s.substr(0, eq));
    std::string value = unquote(trim(s.substr(eq + 1)));
    if (key == "j_sign") {
      try {
        base.j_sign = parse_j_sign(value);
      } catch (const std::invalid_argument&) {
        throw ParseError("j_sign must be +i or -i", line);
      }
    } else if (key == "seed") {
      base.seed = parse_unsigned(value, line);
    } else if (key == "algebra_q") {
      std::uint64_t q = parse_unsigned(value, line);
      if (q > GrassmannAlgebra::kMaxGenerators) throw ParseError("algebra_q too large", line);
      base.algebra_q = static_cast<unsigned>(q);
    } else {
      throw ParseError("unknown key \"" + key + "\"", line);
    }
  }
  return base;
}

Settings load_config(const std::string& path, Settings base) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), base);
}

AlgebraPtr default_algebra(unsigned q) {
  return q % 2 == 0 ? GrassmannAlgebra::paired(q / 2) : GrassmannAlgebra::real(q);
}

}  // namespace superspace
