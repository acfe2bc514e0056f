#include "superspace/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include "superspace/errors.hpp"

namespace superspace {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "?";
}

int merge_sign(Mask a, Mask b) {
  // Each factor of b has to travel past every factor of a with a larger index.
  unsigned swaps = 0;
  while (b != 0) {
    unsigned j = static_cast<unsigned>(std::countr_zero(b));
    b &= b - 1;
    Mask above = j >= 31 ? 0 : (a >> (j + 1));
    swaps += static_cast<unsigned>(std::popcount(above));
  }
  return (swaps & 1U) ? -1 : 1;
}

// ---------------------------------------------------------------------------

GrassmannAlgebra::GrassmannAlgebra(unsigned q, std::vector<unsigned> pairing)
    : q_(q), pairing_(std::move(pairing)) {
  if (q_ > kMaxGenerators) throw std::invalid_argument("too many Grassmann generators");
  if (pairing_.size() != q_) throw std::invalid_argument("pairing length must equal the number of generators");
  for (unsigned k = 1; k <= q_; ++k) {
    unsigned p = pairing_[k - 1];
    if (p < 1 || p > q_ || pairing_[p - 1] != k)
      throw std::invalid_argument("generator pairing is not an involution");
  }
}

std::shared_ptr<const GrassmannAlgebra> GrassmannAlgebra::real(unsigned q) {
  std::vector<unsigned> pairing(q);
  for (unsigned k = 0; k < q; ++k) pairing[k] = k + 1;
  return std::make_shared<const GrassmannAlgebra>(q, std::move(pairing));
}

std::shared_ptr<const GrassmannAlgebra> GrassmannAlgebra::paired(unsigned k) {
  std::vector<unsigned> pairing(2 * k);
  for (unsigned i = 1; i <= k; ++i) {
    pairing[i - 1] = i + k;
    pairing[i + k - 1] = i;
  }
  return std::make_shared<const GrassmannAlgebra>(2 * k, std::move(pairing));
}

std::shared_ptr<const GrassmannAlgebra> GrassmannAlgebra::make(unsigned q, std::vector<unsigned> pairing) {
  return std::make_shared<const GrassmannAlgebra>(q, std::move(pairing));
}

std::pair<Mask, int> GrassmannAlgebra::bar_monomial(Mask m) const {
  // Images of the factors in their original (ascending) order; the sign is
  // the parity of the inversions of that sequence.
  unsigned images[32];
  unsigned n = 0;
  Mask out = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
    unsigned img = pairing_[bit] - 1;
    images[n++] = img;
    out |= Mask{1} << img;
  }
  unsigned inversions = 0;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (images[a] > images[b]) ++inversions;
  return {out, (inversions & 1U) ? -1 : 1};
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!same_algebra(a, b)) throw AlgebraMismatch();
}

bool mask_less(const SuperNumber::Term& t, Mask m) { return t.mask < m; }

}  // namespace

SuperNumber::SuperNumber(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("SuperNumber needs an algebra");
}

SuperNumber::SuperNumber(AlgebraPtr algebra, GaussianRational scalar) : SuperNumber(std::move(algebra)) {
  if (!scalar.is_zero()) terms_.push_back({0, std::move(scalar)});
}

SuperNumber::SuperNumber(AlgebraPtr algebra, std::vector<Term> canonical_terms, int)
    : algebra_(std::move(algebra)), terms_(std::move(canonical_terms)) {}

SuperNumber SuperNumber::generator(AlgebraPtr algebra, unsigned k) {
  if (k < 1 || k > algebra->size()) throw std::out_of_range("generator index out of range");
  return monomial(std::move(algebra), Mask{1} << (k - 1));
}

SuperNumber SuperNumber::monomial(AlgebraPtr algebra, Mask mask, GaussianRational c) {
  if ((mask & ~algebra->full_mask()) != 0) throw std::out_of_range("monomial outside the algebra");
  SuperNumber out(std::move(algebra));
  if (!c.is_zero()) out.terms_.push_back({mask, std::move(c)});
  return out;
}

SuperNumber SuperNumber::from_terms(AlgebraPtr algebra, std::vector<Term> terms) {
  Mask full = algebra->full_mask();
  for (const Term& t : terms)
    if ((t.mask & ~full) != 0) throw std::out_of_range("monomial outside the algebra");
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().mask == t.mask)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  return SuperNumber(std::move(algebra), std::move(merged), 0);
}

Parity SuperNumber::parity() const {
  bool has_even = false;
  bool has_odd = false;
  for (const Term& t : terms_) {
    if (std::popcount(t.mask) & 1)
      has_odd = true;
    else
      has_even = true;
  }
  if (has_even && has_odd) return Parity::mixed;
  return has_odd ? Parity::odd : Parity::even;
}

GaussianRational SuperNumber::coefficient(Mask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask, mask_less);
  if (it != terms_.end() && it->mask == mask) return it->coeff;
  return {};
}

SuperNumber SuperNumber::soul() const {
  std::vector<Term> t;
  for (const Term& term : terms_)
    if (term.mask != 0) t.push_back(term);
  return SuperNumber(algebra_, std::move(t), 0);
}

SuperNumber SuperNumber::inverse() const {
  GaussianRational b = body();
  if (b.is_zero()) throw NotInvertible("Grassmann element with zero body");
  GaussianRational b_inv = b.inverse();
  // a^{-1} = b^{-1} * sum_k (-s/b)^k; the series stops once the power vanishes.
  SuperNumber step = soul() * (-b_inv);
  SuperNumber acc(algebra_, 1);
  SuperNumber power_k = step;
  while (!power_k.is_zero()) {
    acc += power_k;
    power_k = power_k * step;
  }
  return acc * b_inv;
}

SuperNumber SuperNumber::bar() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const Term& term : terms_) {
    auto [mask, sign] = algebra_->bar_monomial(term.mask);
    GaussianRational c = term.coeff.conj();
    if (sign < 0) c = -c;
    t.push_back({mask, std::move(c)});
  }
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
  return SuperNumber(algebra_, std::move(t), 0);
}

SuperNumber SuperNumber::embed(AlgebraPtr larger) const {
  const GrassmannAlgebra& small = *algebra_;
  if (larger->size() < small.size()) throw std::invalid_argument("embedding into a smaller algebra");
  for (unsigned k = 1; k <= small.size(); ++k)
    if (larger->partner(k) != small.partner(k))
      throw std::invalid_argument("embedding does not respect the generator pairing");
  return SuperNumber(std::move(larger), terms_, 0);
}

SuperNumber SuperNumber::operator-() const {
  std::vector<Term> t = terms_;
  for (Term& term : t) term.coeff = -term.coeff;
  return SuperNumber(algebra_, std::move(t), 0);
}

SuperNumber& SuperNumber::operator+=(const SuperNumber& o) {
  require_same(algebra_, o.algebra_);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mask < b->mask)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mask < a->mask) {
      out.push_back(*b++);
    } else {
      GaussianRational c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({a->mask, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SuperNumber& SuperNumber::operator-=(const SuperNumber& o) { return *this += -o; }

SuperNumber& SuperNumber::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& term : terms_) term.coeff *= c;
  return *this;
}

SuperNumber operator*(const SuperNumber& a, const SuperNumber& b) {
  require_same(a.algebra_, b.algebra_);
  if (a.terms_.empty() || b.terms_.empty()) return SuperNumber(a.algebra_);
  const unsigned q = a.algebra_->size();
  std::vector<SuperNumber::Term> out;
  if (q <= 12 && a.terms_.size() * b.terms_.size() >= (std::size_t{1} << q) / 4) {
    // Dense accumulator indexed by mask.
    std::vector<GaussianRational> acc(std::size_t{1} << q);
    std::vector<char> touched(std::size_t{1} << q, 0);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        if (x.mask & y.mask) continue;
        Mask m = x.mask | y.mask;
        GaussianRational c = x.coeff * y.coeff;
        if (merge_sign(x.mask, y.mask) < 0)
          acc[m] -= c;
        else
          acc[m] += c;
        touched[m] = 1;
      }
    }
    for (std::size_t m = 0; m < acc.size(); ++m)
      if (touched[m] && !acc[m].is_zero()) out.push_back({static_cast<Mask>(m), std::move(acc[m])});
    return SuperNumber(a.algebra_, std::move(out), 0);
  }
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      if (x.mask & y.mask) continue;
      GaussianRational c = x.coeff * y.coeff;
      if (merge_sign(x.mask, y.mask) < 0) c = -c;
      out.push_back({x.mask | y.mask, std::move(c)});
    }
  }
  return SuperNumber::from_terms(a.algebra_, std::move(out));
}

bool operator==(const SuperNumber& a, const SuperNumber& b) {
  if (!same_algebra(a.algebra_, b.algebra_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mask != b.terms_[i].mask || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

namespace {

// Coefficient text for a term; `leading` controls whether a '+' joiner is
// emitted. Returns the joiner and the coefficient text separately.
std::pair<std::string, std::string> coefficient_text(const GaussianRational& c, bool has_generators) {
  std::string sign = "+";
  GaussianRational shown = c;
  if (c.is_real() && sgn(c.re()) < 0) {
    sign = "-";
    shown = -c;
  } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
    sign = "-";
    shown = -c;
  }
  std::string text;
  if (shown == GaussianRational(1) && has_generators) {
    text = "";
  } else {
    text = shown.to_string();
  }
  return {sign, text};
}

}  // namespace

std::string SuperNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    auto [sign, coeff] = coefficient_text(t.coeff, t.mask != 0);
    std::string gens;
    for (Mask rest = t.mask; rest != 0; rest &= rest - 1) {
      if (!gens.empty() || !coeff.empty()) gens += "*";
      gens += "x" + std::to_string(std::countr_zero(rest) + 1);
    }
    if (first)
      out += (sign == "-" ? "-" : "");
    else
      out += " " + sign + " ";
    out += coeff + gens;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SuperNumber& x) { return os << x.to_string(); }

SuperNumber power(const SuperNumber& x, unsigned k) {
  SuperNumber out(x.algebra(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * x;
  return out;
}

}  // namespace superspace
