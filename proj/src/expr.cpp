#include "superspace/expr.hpp"

#include <cctype>

#include "superspace/errors.hpp"

namespace superspace {

namespace {

class Parser {
 public:
  Parser(std::string_view text, AlgebraPtr algebra) : text_(text), algebra_(std::move(algebra)) {}

  SuperNumber parse() {
    skip();
    if (at_end()) fail("empty expression");
    SuperNumber x = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return x;
  }

 private:
  std::string_view text_;
  AlgebraPtr algebra_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  SuperNumber expr() {
    SuperNumber acc(algebra_);
    bool first = true;
    for (;;) {
      skip();
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (accept('+')) {
      } else if (!first) {
        return acc;
      }
      SuperNumber t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
  }

  SuperNumber term() {
    SuperNumber x = factor();
    while (accept('*')) x = x * factor();
    return x;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned generator_index() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.empty()) fail("expected a generator index");
    if (d.size() > 3) {
      pos_ = start;
      fail("generator index out of range");
    }
    unsigned k = static_cast<unsigned>(std::stoul(d));
    if (k == 0 || k > algebra_->size()) {
      pos_ = start;
      fail("generator x" + d + " out of range 1.." + std::to_string(algebra_->size()));
    }
    return k;
  }

  SuperNumber factor() {
    skip();
    if (at_end()) fail("unexpected end of expression");
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      SuperNumber x = expr();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    if (c == 'i') {
      ++pos_;
      return SuperNumber(algebra_, GaussianRational::i());
    }
    if (c == 'x') {
      ++pos_;
      return SuperNumber::generator(algebra_, generator_index());
    }
    if (c == 'b' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'x') {
      pos_ += 2;
      return SuperNumber::generator(algebra_, algebra_->partner(generator_index()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SuperNumber(algebra_, number());
    fail(std::string("unexpected '") + c + "'");
  }

  GaussianRational number() {
    std::size_t start = pos_;
    std::string num = digits();
    Rational r(num);
    if (peek() == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      Rational d(den);
      if (sgn(d) == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      r /= d;
    }
    if (peek() == 'i') {
      ++pos_;
      return {Rational(0), r};
    }
    return r;
  }
};

}  // namespace

SuperNumber parse_expr(std::string_view text, const AlgebraPtr& algebra) { return Parser(text, algebra).parse(); }

GaussianRational parse_scalar(std::string_view text) {
  SuperNumber x = parse_expr(text, GrassmannAlgebra::real(0));
  return x.body();
}

}  // namespace superspace
