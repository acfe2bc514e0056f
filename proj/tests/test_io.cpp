#include <doctest.h>

#include "superspace/config.hpp"
#include "superspace/errors.hpp"
#include "superspace/expr.hpp"
#include "superspace/random.hpp"
#include "superspace/serialize.hpp"
#include "superspace/verify.hpp"

using namespace superspace;

namespace {

SuperNumber x(const AlgebraPtr& a, unsigned k) { return SuperNumber::generator(a, k); }

std::size_t error_position(std::string_view text, const AlgebraPtr& a) {
  try {
    parse_expr(text, a);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for ", std::string(text));
  return 0;
}

}  // namespace

TEST_CASE("expressions build the same supernumbers as direct arithmetic") {
  auto a = GrassmannAlgebra::paired(4);
  CHECK(parse_expr("x2*x1", a) == -(x(a, 1) * x(a, 2)));
  CHECK(parse_expr("x1*x1", a).is_zero());
  CHECK(parse_expr("bx1", a) == x(a, 5));
  CHECK(parse_expr("bx6", a) == x(a, 2));
  GaussianRational c(Rational(1, 2), Rational(3, 2));
  CHECK(parse_expr("(1/2 + 3/2i)*bx1", a) == c * x(a, 5));
  CHECK(parse_expr("-3 + 2*x1*x2 - i*x3", a) ==
        SuperNumber(a, -3) + GaussianRational(2) * x(a, 1) * x(a, 2) - GaussianRational(0, 1) * x(a, 3));
  CHECK(parse_expr("-(x1 + x2)*(x1 - x2)", a) == -((x(a, 1) + x(a, 2)) * (x(a, 1) - x(a, 2))));
  CHECK(parse_expr("  7/14 ", a) == SuperNumber(a, Rational(1, 2)));
  CHECK(parse_expr("--x1", a) == x(a, 1));
}

TEST_CASE("printed supernumbers read back to the same value") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(7);
  for (int t = 0; t < 200; ++t) {
    SuperNumber v = rng.any(a, 6);
    CHECK(parse_expr(v.to_string(), a) == v);
  }
  CHECK(parse_expr(SuperNumber(a).to_string(), a).is_zero());
}

TEST_CASE("expression errors report where they happened") {
  auto a = GrassmannAlgebra::paired(4);
  CHECK(error_position("x1 + ", a) == 5);
  CHECK(error_position("x9", a) == 1);
  CHECK(error_position("1 + x0", a) == 5);
  CHECK(error_position("(x1", a) == 3);
  CHECK(error_position("x1 $ x2", a) == 3);
  CHECK(error_position("1/0", a) == 0);
  CHECK_THROWS_AS(parse_scalar("x1"), ParseError);
  CHECK(parse_scalar("2 - 1/3i") == GaussianRational(2, Rational(-1, 3)));
  CHECK(parse_scalar("i") == GaussianRational(0, 1));
}

TEST_CASE("supernumber JSON is canonical and round-trips") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(11);
  for (int t = 0; t < 100; ++t) {
    SuperNumber v = rng.any(a, 5);
    Json j = to_json(v);
    SuperNumber back = supernumber_from_json(j, algebra_from_json(j), ScalarForm::json);
    CHECK(back == v);
    CHECK(to_json(back).dump() == j.dump());
  }
  Json j = to_json(scalar_from_json(Json("6/4 - i"), ScalarForm::expr));
  CHECK(j.dump() == R"({"im":"-1","re":"3/2"})");
  CHECK(scalar_from_json(Json(5), ScalarForm::json) == GaussianRational(5));
  CHECK(scalar_from_json(Json("3/2 - i"), ScalarForm::expr) == GaussianRational(Rational(3, 2), -1));
  CHECK_THROWS_AS(scalar_from_json(Json::array(), ScalarForm::json), ParseError);
}

TEST_CASE("algebra documents carry the pairing") {
  auto a = GrassmannAlgebra::paired(3);
  auto b = algebra_from_json(algebra_json(a));
  CHECK(b->size() == 6);
  CHECK(b->pairing() == a->pairing());
  Json bad = algebra_json(a);
  bad["pairing"][0] = 3;
  CHECK_THROWS(algebra_from_json(bad));
}

TEST_CASE("JSON and expression inputs describe the same matrix") {
  auto a = GrassmannAlgebra::paired(4);
  Json by_expr = {{"shape", {1, 1}}, {"matrix", Json::array({Json::array({"2 + x1*x2", "x3"}), Json::array({"bx1", "1 - 1/2i"})})}};
  Json t12 = {{"mask", "11000000"}, {"re", "1"}, {"im", "0"}};
  Json t0 = {{"mask", "00000000"}, {"re", "2"}, {"im", "0"}};
  auto term = [](const char* mask) {
    return Json{{"terms", Json::array({Json{{"mask", mask}, {"re", "1"}, {"im", "0"}}})}};
  };
  Json by_json = {{"shape", {1, 1}},
                  {"matrix", Json::array({Json::array({Json{{"terms", {t0, t12}}}, term("00100000")}),
                                          Json::array({term("00001000"), Json{{"re", "1"}, {"im", "-1/2"}}})})}};
  SuperMatrix m1 = supermatrix_from_json(by_expr, a, ScalarForm::expr);
  SuperMatrix m2 = supermatrix_from_json(by_json, a, ScalarForm::json);
  CHECK(to_json(m1).dump() == to_json(m2).dump());
  CHECK(m1.entries()(0, 0) == SuperNumber(a, 2) + x(a, 1) * x(a, 2));
  CHECK(m1.entries()(1, 0) == x(a, 5));
  CHECK_THROWS_AS(supermatrix_from_json(Json{{"shape", {1, 1}}, {"matrix", Json::array({Json::array({"1"})})}}, a, ScalarForm::expr),
                  ParseError);
}

TEST_CASE("structured values round-trip through JSON") {
  auto a = GrassmannAlgebra::paired(4);
  Sampler rng(3);
  for (int t = 0; t < 10; ++t) {
    SuperMatrix m = rng.even_supermatrix(a, BlockShape{2, 1});
    Json jm = to_json(m);
    CHECK(to_json(supermatrix_from_json(jm, a, ScalarForm::json)).dump() == jm.dump());

    AlgebraElement e = rng.gl_element();
    Json je = to_json(e);
    CHECK(to_json(algebra_element_from_json(je, ScalarForm::json)).dump() == je.dump());

    BigCellPoint pt = rng.big_cell_point(a);
    Json jp = to_json(pt);
    CHECK(to_json(big_cell_point_from_json(jp, a, ScalarForm::json)).dump() == jp.dump());

    SuperPoincareElement g = rng.super_poincare(a);
    Json jg = to_json(g);
    CHECK(to_json(super_poincare_from_json(jg, a, ScalarForm::json)).dump() == jg.dump());
  }
  Plane plane = rng.plane();
  PluckerPoint y = plucker(plane);
  CHECK(to_json(plucker_from_json(to_json(y), ScalarForm::json)).dump() == to_json(y).dump());
  CHECK_THROWS_AS(plucker_from_json(Json::array({1, 2, 3}), ScalarForm::json), ParseError);
}

TEST_CASE("config files set defaults and reject unknown keys") {
  Settings s = parse_config("# defaults\nj_sign = \"+i\"\n\nseed = 42\nalgebra_q = 6\n");
  CHECK(s.j_sign == JSign::plus_i);
  CHECK(s.seed == 42);
  CHECK(s.algebra_q == 6);
  Settings d = parse_config("");
  CHECK(d.j_sign == JSign::minus_i);
  CHECK(d.seed == 0);
  CHECK(d.algebra_q == 8);
  try {
    parse_config("seed = 1\ncolour = blue\n");
    FAIL("unknown key accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_config("j_sign = 2"), ParseError);
  CHECK_THROWS_AS(parse_config("seed"), ParseError);
  CHECK(default_algebra(8)->partner(1) == 5);
  CHECK(default_algebra(3)->partner(2) == 2);
}

TEST_CASE("verify suites report exact checks") {
  VerifyOptions opt;
  CHECK(suite_names().front() == "all");
  SuiteReport geo = run_verify("geometry", opt);
  CHECK(!geo.checks.empty());
  CHECK(geo.passed());
  for (const auto& c : geo.checks) CHECK_MESSAGE(c.passed, c.name, ": ", c.detail);
  SuiteReport lie = run_verify("liesuper", opt);
  CHECK(lie.passed());
  CHECK_THROWS_AS(run_verify("nonsense", opt), std::invalid_argument);
}

TEST_CASE("the printed Berezinian variant fails its suite") {
  VerifyOptions opt;
  opt.printed_berezinian = true;
  CHECK_FALSE(run_verify("berezinian", opt).passed());
}
