#pragma once

#include <stdexcept>
#include <string>

namespace superspace {

// Errors caused by the mathematics of the input (a singular block, a point
// off the chart). The CLI maps these to exit code 3.
class MathDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public MathDomainError {
 public:
  explicit NotInvertible(const std::string& what)
      : MathDomainError("not invertible: " + what) {}
};

class NotInBigCell : public MathDomainError {
 public:
  explicit NotInBigCell(const std::string& what)
      : MathDomainError("not in big cell: " + what) {}
};

class DegeneratePlane : public MathDomainError {
 public:
  explicit DegeneratePlane(const std::string& what)
      : MathDomainError("degenerate plane: " + what) {}
};

class InvalidPoint : public MathDomainError {
 public:
  explicit InvalidPoint(const std::string& what)
      : MathDomainError("invalid point: " + what) {}
};

class NonHermitianTranslation : public MathDomainError {
 public:
  explicit NonHermitianTranslation(const std::string& what)
      : MathDomainError("translation is not hermitian: " + what) {}
};

// Errors caused by malformed or mismatched operands.
class AlgebraMismatch : public std::invalid_argument {
 public:
  AlgebraMismatch() : std::invalid_argument("operands live in different Grassmann algebras") {}
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PatternViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace superspace
