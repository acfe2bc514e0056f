#pragma once

// Exact arithmetic in a finite Grassmann algebra over the Gaussian rationals.
//
// A monomial is a bitmask over the generators; bit k-1 stands for generator
// k, and the monomial is the product of its generators in ascending index
// order. Every SuperNumber is kept canonical: terms sorted by mask, no zero
// coefficients.
//
// Complex conjugation follows the functorial convention
//   bar(x y) = bar(x) bar(y)   (no reversal of odd factors),
// so bar maps generator k to its partner under the algebra's pairing and
// keeps the factor order; the permutation sign comes only from putting the
// image back into ascending order.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superspace/rational.hpp"

namespace superspace {

using Mask = std::uint32_t;

enum class Parity { even, odd, mixed };

std::string to_string(Parity p);

// (-1)^(number of transpositions needed to merge the ordered factors of a
// followed by those of b). Callers ensure a & b == 0.
int merge_sign(Mask a, Mask b);

class GrassmannAlgebra {
 public:
  static constexpr unsigned kMaxGenerators = 24;

  // Generators are 1-based in the public interface; `pairing[k-1]` is the
  // partner of generator k. Throws std::invalid_argument unless the pairing
  // is an involution of {1..q}.
  GrassmannAlgebra(unsigned q, std::vector<unsigned> pairing);

  // All generators are their own conjugates.
  static std::shared_ptr<const GrassmannAlgebra> real(unsigned q);
  // 2k generators, generator i paired with i+k (xi_i <-> bar xi_i).
  static std::shared_ptr<const GrassmannAlgebra> paired(unsigned k);
  static std::shared_ptr<const GrassmannAlgebra> make(unsigned q, std::vector<unsigned> pairing);

  unsigned size() const { return q_; }
  const std::vector<unsigned>& pairing() const { return pairing_; }
  unsigned partner(unsigned generator) const { return pairing_.at(generator - 1); }
  Mask full_mask() const { return q_ == 32 ? ~Mask{0} : ((Mask{1} << q_) - 1); }

  // Image of a monomial under bar together with the reordering sign.
  std::pair<Mask, int> bar_monomial(Mask m) const;

  friend bool operator==(const GrassmannAlgebra& a, const GrassmannAlgebra& b) {
    return a.q_ == b.q_ && a.pairing_ == b.pairing_;
  }

 private:
  unsigned q_;
  std::vector<unsigned> pairing_;
};

using AlgebraPtr = std::shared_ptr<const GrassmannAlgebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

class SuperNumber {
 public:
  struct Term {
    Mask mask;
    GaussianRational coeff;
  };

  explicit SuperNumber(AlgebraPtr algebra);
  SuperNumber(AlgebraPtr algebra, GaussianRational scalar);

  // Generator k (1-based).
  static SuperNumber generator(AlgebraPtr algebra, unsigned k);
  // c * (ordered product of the generators in `mask`).
  static SuperNumber monomial(AlgebraPtr algebra, Mask mask, GaussianRational c = 1);
  // Sums duplicate masks and drops zeros; masks must lie inside the algebra.
  static SuperNumber from_terms(AlgebraPtr algebra, std::vector<Term> terms);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::span<const Term> terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0); }
  Parity parity() const;

  GaussianRational coefficient(Mask mask) const;
  GaussianRational body() const { return coefficient(0); }
  SuperNumber soul() const;

  // Throws NotInvertible when the body vanishes.
  SuperNumber inverse() const;
  SuperNumber bar() const;

  // Same element viewed in a larger algebra whose first generators coincide
  // with this one's.
  SuperNumber embed(AlgebraPtr larger) const;

  SuperNumber operator-() const;
  SuperNumber& operator+=(const SuperNumber& o);
  SuperNumber& operator-=(const SuperNumber& o);
  SuperNumber& operator*=(const SuperNumber& o) { return *this = *this * o; }
  SuperNumber& operator*=(const GaussianRational& c);

  friend SuperNumber operator+(SuperNumber a, const SuperNumber& b) { return a += b; }
  friend SuperNumber operator-(SuperNumber a, const SuperNumber& b) { return a -= b; }
  friend SuperNumber operator*(const SuperNumber& a, const SuperNumber& b);
  friend SuperNumber operator*(SuperNumber a, const GaussianRational& c) { return a *= c; }
  friend SuperNumber operator*(const GaussianRational& c, SuperNumber a) { return a *= c; }

  friend bool operator==(const SuperNumber& a, const SuperNumber& b);

  // "1 + 2*x1*x2 - i*x3"; generators print as x<k>. Parseable by parse_expr.
  std::string to_string() const;

 private:
  SuperNumber(AlgebraPtr algebra, std::vector<Term> canonical_terms, int);

  AlgebraPtr algebra_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const SuperNumber& x);

// x^k for k >= 0.
SuperNumber power(const SuperNumber& x, unsigned k);

}  // namespace superspace
