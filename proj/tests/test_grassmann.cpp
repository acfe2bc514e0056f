#include <doctest.h>

#include "oracles.hpp"
#include "superspace/errors.hpp"
#include "superspace/grassmann.hpp"
#include "superspace/random.hpp"

using namespace superspace;

namespace {

SuperNumber x(const AlgebraPtr& a, unsigned k) { return SuperNumber::generator(a, k); }

std::vector<SuperNumber> monomial_basis(const AlgebraPtr& a) {
  std::vector<SuperNumber> out;
  for (Mask m = 0; m <= a->full_mask(); ++m) out.push_back(SuperNumber::monomial(a, m));
  return out;
}

int sign_of(Parity p, Parity q) { return p == Parity::odd && q == Parity::odd ? -1 : 1; }

}  // namespace

TEST_CASE("rational text form is lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(GaussianRational(Rational(1, 2), Rational(3, 2)).to_string() == "(1/2 + 3/2i)");
  CHECK(GaussianRational(0, -1).to_string() == "-i");
}

TEST_CASE("gaussian rational inverse") {
  GaussianRational z(3, 4);
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.inverse() == GaussianRational(Rational(3, 25), Rational(-4, 25)));
  CHECK_THROWS_AS(GaussianRational().inverse(), NotInvertible);
}

TEST_CASE("pairing must be an involution") {
  CHECK_THROWS_AS(GrassmannAlgebra(3, {2, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GrassmannAlgebra(2, {1}), std::invalid_argument);
  CHECK_NOTHROW(GrassmannAlgebra(4, {3, 4, 1, 2}));
  CHECK(GrassmannAlgebra::paired(2)->partner(1) == 3);
  CHECK(GrassmannAlgebra::paired(2)->partner(4) == 2);
}

TEST_CASE("small products") {
  auto a = GrassmannAlgebra::real(4);
  SuperNumber one(a, 1);
  SuperNumber e = x(a, 1) * x(a, 2);
  CHECK((one + e) * (one - e) == one);
  CHECK((x(a, 1) * x(a, 1)).is_zero());
  CHECK(x(a, 2) * x(a, 1) == -(x(a, 1) * x(a, 2)));
  CHECK(x(a, 3) * x(a, 1) * x(a, 2) == x(a, 1) * x(a, 2) * x(a, 3));
  CHECK(x(a, 2) * x(a, 1) * x(a, 3) == -(x(a, 1) * x(a, 2) * x(a, 3)));
}

TEST_CASE("products agree with the word-sorting oracle, exhaustively for q <= 4") {
  for (unsigned q = 0; q <= 4; ++q) {
    auto a = GrassmannAlgebra::real(q);
    auto basis = monomial_basis(a);
    for (const auto& u : basis)
      for (const auto& v : basis) CHECK(u * v == oracle::multiply(u, v));
  }
}

TEST_CASE("merge_sign matches the oracle on all disjoint pairs in q = 6") {
  for (Mask a = 0; a < 64; ++a)
    for (Mask b = 0; b < 64; ++b) {
      if (a & b) continue;
      std::vector<unsigned> w = oracle::word(a);
      for (unsigned g : oracle::word(b)) w.push_back(g);
      CHECK(merge_sign(a, b) == oracle::normal_order(w).second);
    }
}

TEST_CASE("supercommutativity and associativity on monomials") {
  auto a = GrassmannAlgebra::paired(2);
  auto basis = monomial_basis(a);
  for (const auto& u : basis)
    for (const auto& v : basis) {
      CHECK(u * v == GaussianRational(sign_of(u.parity(), v.parity())) * (v * u));
      for (const auto& w : basis) CHECK((u * v) * w == u * (v * w));
    }
}

TEST_CASE("random pairs at q = 8") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(11);
  for (int k = 0; k < 200; ++k) {
    SuperNumber u = rng.any(a, 6);
    SuperNumber v = rng.any(a, 6);
    SuperNumber w = rng.any(a, 3);
    CHECK(u * v == oracle::multiply(u, v));
    CHECK(u * (v + w) == u * v + u * w);
    CHECK((u * v).bar() == u.bar() * v.bar());
    CHECK(u.bar() == oracle::bar(u));
    CHECK(u.bar().bar() == u);
  }
}

TEST_CASE("dense and sparse product paths agree") {
  auto a = GrassmannAlgebra::real(10);
  Sampler rng(5);
  for (int k = 0; k < 20; ++k) {
    SuperNumber u = rng.any(a, 400);
    SuperNumber v = rng.any(a, 300);
    CHECK(u * v == oracle::multiply(u, v));
  }
}

TEST_CASE("bar on generators") {
  auto a = GrassmannAlgebra::paired(2);
  CHECK(x(a, 1).bar() == x(a, 3));
  CHECK(x(a, 3).bar() == x(a, 1));
  // bar(x1 x2) = x3 x4; bar(x1 x3) = x3 x1 = -x1 x3.
  CHECK((x(a, 1) * x(a, 2)).bar() == x(a, 3) * x(a, 4));
  CHECK((x(a, 1) * x(a, 3)).bar() == -(x(a, 1) * x(a, 3)));
  SuperNumber c(a, GaussianRational(1, 2));
  CHECK(c.bar() == SuperNumber(a, GaussianRational(1, -2)));
}

TEST_CASE("parity, body and soul") {
  auto a = GrassmannAlgebra::real(3);
  CHECK(SuperNumber(a).parity() == Parity::even);
  CHECK(x(a, 1).parity() == Parity::odd);
  CHECK((x(a, 1) * x(a, 2)).parity() == Parity::even);
  CHECK((x(a, 1) + x(a, 1) * x(a, 2)).parity() == Parity::mixed);
  SuperNumber y = SuperNumber(a, 3) + x(a, 2);
  CHECK(y.body() == GaussianRational(3));
  CHECK(y.soul() == x(a, 2));
}

TEST_CASE("inverse and nilpotency") {
  auto a = GrassmannAlgebra::paired(3);
  Sampler rng(2);
  for (int k = 0; k < 50; ++k) {
    SuperNumber y = rng.invertible_even(a, 4) + rng.odd(a, 2);
    SuperNumber inv = y.inverse();
    CHECK(y * inv == SuperNumber(a, 1));
    CHECK(inv * y == SuperNumber(a, 1));
    CHECK(inv == oracle::inverse(y));
  }
  CHECK_THROWS_AS(x(a, 1).inverse(), NotInvertible);
  SuperNumber s = x(a, 1) * x(a, 2) + x(a, 3) * x(a, 4) + x(a, 5) * x(a, 6);
  CHECK(power(s, 3) == SuperNumber::monomial(a, 0b111111, 6));
  CHECK(power(s, 4).is_zero());
}

TEST_CASE("operands from different algebras are rejected") {
  auto a = GrassmannAlgebra::real(2);
  auto b = GrassmannAlgebra::real(3);
  CHECK_THROWS_AS(x(a, 1) * x(b, 1), AlgebraMismatch);
  CHECK_THROWS_AS(x(a, 1) + x(b, 1), AlgebraMismatch);
  CHECK_THROWS(SuperNumber::generator(a, 3));
  // Structurally equal algebras are interchangeable.
  auto c = GrassmannAlgebra::real(2);
  CHECK(x(a, 1) * x(c, 2) == x(a, 1) * x(a, 2));
}

TEST_CASE("embedding keeps products") {
  auto a = GrassmannAlgebra::real(2);
  auto b = GrassmannAlgebra::real(4);
  SuperNumber u = SuperNumber(a, 2) + x(a, 1) * x(a, 2);
  SuperNumber v = x(a, 2) + x(a, 1);
  CHECK((u * v).embed(b) == u.embed(b) * v.embed(b));
}

TEST_CASE("text form") {
  auto a = GrassmannAlgebra::real(3);
  CHECK(SuperNumber(a).to_string() == "0");
  CHECK((SuperNumber(a, 1) + x(a, 1) * x(a, 2)).to_string() == "1 + x1*x2");
  CHECK((x(a, 2) * x(a, 1)).to_string() == "-x1*x2");
  CHECK((GaussianRational(Rational(1, 2), Rational(3, 2)) * x(a, 3)).to_string() == "(1/2 + 3/2i)*x3");
  CHECK((GaussianRational(0, 2) * x(a, 3)).to_string() == "2i*x3");
}
