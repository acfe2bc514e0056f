// superspace: command-line front end. Every subcommand reads one JSON
// document (a file, or stdin when the path is "-") and prints canonical JSON.
//
// Exit codes: 0 ok, 1 a check or verification failed, 2 usage or input
// error, 3 math-domain error (singular block, point off the chart, ...).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "superspace/config.hpp"
#include "superspace/errors.hpp"
#include "superspace/geometry.hpp"
#include "superspace/liesuper.hpp"
#include "superspace/realform.hpp"
#include "superspace/serialize.hpp"
#include "superspace/superflag.hpp"
#include "superspace/verify.hpp"

using namespace superspace;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kMathDomain = 3;

struct Options {
  std::string config_path;
  std::string j_sign;
  std::int64_t seed = -1;
  int algebra_q = -1;
  bool expr = false;
  bool json = false;
  std::string ber_variant = "standard";
  bool full = false;
  std::string input = "-";
  std::string argument;
};

struct Context {
  Settings settings;
  ScalarForm form = ScalarForm::json;
  ConjugationConfig cfg;
  Json doc;
  AlgebraPtr algebra;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& key(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw UsageError(std::string("input needs key \"") + name + "\"");
  return doc.at(name);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_ber(Context& c, const Options& o) {
  key(c.doc, "matrix");
  SuperMatrix g = supermatrix_from_json(c.doc, c.algebra, c.form);
  bool printed = o.ber_variant == "printed";
  SuperNumber b = printed ? berezinian_unnormalized_variant(g) : sm_berezinian(g);
  emit({{"berezinian", to_json(b)}, {"variant", o.ber_variant}});
  return kOk;
}

int cmd_bracket(Context& c, const Options&) {
  AlgebraElement x = algebra_element_from_json(key(c.doc, "x"), c.form);
  AlgebraElement y = algebra_element_from_json(key(c.doc, "y"), c.form);
  AlgebraElement z = bracket(x, y);
  emit({{"bracket", to_json(z)}, {"parity", z.is_zero() ? "even" : to_string(z.parity())}});
  return kOk;
}

int cmd_decompose(Context& c, const Options&) {
  AlgebraElement x = algebra_element_from_json(key(c.doc, "x"), c.form);
  auto [xp, xn] = split_pn(x);
  RootDecomposition rd = root_decomposition(x);
  Json roots = Json::object();
  for (const auto& [root, part] : rd.components) {
    auto [i, j] = root.indices();
    roots[root.to_string()] = to_json(part(i - 1, j - 1));
  }
  Json cartan = Json::array();
  for (const auto& h : rd.cartan) cartan.push_back(to_json(h));
  emit({{"p", to_json(xp)}, {"n", to_json(xn)}, {"cartan", cartan}, {"roots", roots}});
  return kOk;
}

int cmd_sigma(Context& c, const Options&) {
  AlgebraElement x = algebra_element_from_json(key(c.doc, "x"), c.form);
  AlgebraElement s = sigma(x);
  emit({{"sigma", to_json(s)}, {"fixed", s == x}});
  return kOk;
}

int cmd_xi(Context& c, const Options&) {
  if (c.doc.contains("point")) {
    BigCellPoint pt = big_cell_point_from_json(c.doc.at("point"), c.algebra, c.form);
    BigCellPoint x = xi_bigcell(pt, c.cfg);
    emit({{"xi", to_json(x)}, {"fixed", x == pt}, {"j", to_string(c.cfg.j_sign)}});
    return kOk;
  }
  SuperMatrix g = supermatrix_from_json(key(c.doc, "g"), c.algebra, c.form);
  SuperMatrix x = xi_group(g, c.cfg);
  emit({{"xi", to_json(x)}, {"theta", to_json(theta_group(g, c.cfg))}, {"fixed", x == g},
        {"j", to_string(c.cfg.j_sign)}});
  return kOk;
}

int cmd_plucker(Context& c, const Options&) {
  Plane p(complex_matrix_from_json(key(c.doc, "plane"), c.form, 4, 2));
  PluckerPoint y = plucker(p);
  emit({{"plucker", to_json(y)}, {"klein_form", to_json(klein_form(y))}, {"region", to_string(cone_membership(y))}});
  return kOk;
}

int cmd_klein_check(Context& c, const Options&) {
  PluckerPoint y = plucker_from_json(key(c.doc, "plucker"), c.form);
  GaussianRational q = klein_form(y);
  bool on = q.is_zero() && !y.is_zero();
  emit({{"klein_form", to_json(q)}, {"on_quadric", on}});
  return on ? kOk : kCheckFailed;
}

int cmd_cone(Context& c, const Options&) {
  PluckerPoint y = plucker_from_json(key(c.doc, "plucker"), c.form);
  ConeRegion r = cone_membership(y);
  Json out = {{"region", to_string(r)}, {"residual", to_json(cone_residual(y))}};
  if (r == ConeRegion::big_cell) out["A"] = to_json(chart_to_cell(y));
  emit(out);
  return kOk;
}

int cmd_act_poincare(Context& c, const Options&) {
  ComplexMatrix a = complex_matrix_from_json(key(c.doc, "A"), c.form, 2, 2);
  ComplexMatrix l = complex_matrix_from_json(key(c.doc, "L"), c.form, 2, 2);
  ComplexMatrix n = complex_matrix_from_json(key(c.doc, "N"), c.form, 2, 2);
  if (c.doc.value("real", false)) {
    emit({{"A", to_json(real_poincare_act(l, n, a))}});
    return kOk;
  }
  ComplexMatrix r = complex_matrix_from_json(key(c.doc, "R"), c.form, 2, 2);
  emit({{"A", to_json(poincare_act({l, r, n}, a))}});
  return kOk;
}

int cmd_pi(Context& c, const Options&) {
  SuperMatrix g = supermatrix_from_json(key(c.doc, "g"), c.algebra, c.form);
  emit({{"point", to_json(pi_chart(g))}, {"stabilizer", stabilizer_membership(g)}});
  return kOk;
}

int cmd_act_super(Context& c, const Options&) {
  SuperPoincareElement p = super_poincare_from_json(key(c.doc, "element"), c.algebra, c.form);
  BigCellPoint pt = big_cell_point_from_json(key(c.doc, "point"), c.algebra, c.form);
  emit({{"point", to_json(superpoincare_act(p, pt))}});
  return kOk;
}

int cmd_twistor_check(Context& c, const Options&) {
  FlagChartPair pair = c.doc.contains("g")
                           ? flag_charts(supermatrix_from_json(c.doc.at("g"), c.algebra, c.form))
                           : FlagChartPair{lambda_matrix_from_json(key(c.doc, "A_G1"), c.algebra, c.form, 2, 2),
                                           lambda_matrix_from_json(key(c.doc, "alpha_G1"), c.algebra, c.form, 1, 2),
                                           lambda_matrix_from_json(key(c.doc, "B"), c.algebra, c.form, 2, 2),
                                           lambda_matrix_from_json(key(c.doc, "beta2"), c.algebra, c.form, 2, 1)};
  bool holds = twistor_check(pair);
  emit({{"A_G1", to_json(pair.a_g1)},
        {"alpha_G1", to_json(pair.alpha_g1)},
        {"B", to_json(pair.b)},
        {"beta2", to_json(pair.beta2)},
        {"holds", holds}});
  return holds ? kOk : kCheckFailed;
}

int cmd_real_coords(Context& c, const Options&) {
  BigCellPoint pt = big_cell_point_from_json(key(c.doc, "point"), c.algebra, c.form);
  RealCoordinates rc = real_coordinates(pt, c.cfg);
  emit({{"A_prime", to_json(rc.a_prime)},
        {"alpha", to_json(rc.alpha)},
        {"real", is_real_point(pt, c.cfg)},
        {"j", to_string(c.cfg.j_sign)}});
  return kOk;
}

int cmd_roots(const Options& o) {
  PatternName name;
  try {
    name = parse_pattern_name(o.argument);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SubspacePattern s = pattern(name);
  Json roots = Json::array();
  for (const auto& r : pattern_roots(s)) roots.push_back(r.to_string());
  emit({{"pattern", to_string(name)},
        {"roots", roots},
        {"dimension", to_json(pattern_dimension(s))},
        {"closed", closed_under_bracket(s)}});
  return kOk;
}

int cmd_verify(const Context& c, const Options& o) {
  VerifyOptions vo{c.settings.seed, c.cfg, o.ber_variant == "printed", o.full};
  SuiteReport rep;
  try {
    rep = run_verify(o.argument, vo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& n : rep.notes) std::cout << "note  " << n << "\n";
  std::size_t failed = 0;
  for (const auto& r : rep.checks) {
    if (!r.passed) ++failed;
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << "[" << r.suite << "] " << r.name << " (" << r.detail
              << ") -- " << r.anchor << "\n";
  }
  std::cout << (failed == 0 ? "verify " + o.argument + ": all " + std::to_string(rep.checks.size()) + " checks passed"
                            : "verify " + o.argument + ": " + std::to_string(failed) + " of " +
                                  std::to_string(rep.checks.size()) + " checks failed")
            << "\n";
  return rep.passed() ? kOk : kCheckFailed;
}

Context make_context(const Options& o, bool needs_document) {
  Context c;
  std::string path = o.config_path;
  if (path.empty() && std::filesystem::exists("superspace.toml")) path = "superspace.toml";
  if (!path.empty()) {
    try {
      c.settings = load_config(path);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  if (!o.j_sign.empty()) c.settings.j_sign = parse_j_sign(o.j_sign);
  if (o.seed >= 0) c.settings.seed = static_cast<std::uint64_t>(o.seed);
  if (o.algebra_q >= 0) c.settings.algebra_q = static_cast<unsigned>(o.algebra_q);
  c.cfg.j_sign = c.settings.j_sign;
  c.form = o.expr ? ScalarForm::expr : ScalarForm::json;
  if (needs_document) {
    c.doc = read_document(o.input);
    c.algebra = c.doc.is_object() && c.doc.contains("algebra") ? algebra_from_json(c.doc.at("algebra"))
                                                                : default_algebra(c.settings.algebra_q);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact supergeometry: Grassmann algebras, supermatrices, sl(4|1), super flags"};
  app.name("superspace");
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--config", o.config_path, "key = value defaults file (default: ./superspace.toml if present)");
  app.add_option("--j", o.j_sign, "j in the group conjugations")->check(CLI::IsMember({"+i", "-i", "i"}));
  app.add_option("--seed", o.seed, "RNG seed for verify suites")->check(CLI::NonNegativeNumber);
  app.add_option("--algebra-q", o.algebra_q, "generators of the default Grassmann algebra")
      ->check(CLI::Range(0, static_cast<int>(GrassmannAlgebra::kMaxGenerators)));
  auto* json_flag = app.add_flag("--json", o.json, "scalar leaves are JSON objects (default)");
  auto* expr_flag = app.add_flag("--expr", o.expr, "scalar leaves are expression strings");
  json_flag->excludes(expr_flag);
  app.add_option("--ber-variant", o.ber_variant, "standard or printed (det(s^-1) det(p - q s r))")
      ->check(CLI::IsMember({"standard", "printed"}));
  app.add_flag("--full", o.full, "exhaustive super-Jacobi in verify liesuper");

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(Context&, const Options&);
  };
  const Sub subs[] = {
      {"ber", "Berezinian of an even supermatrix", cmd_ber},
      {"bracket", "superbracket of two gl(4|1) elements", cmd_bracket},
      {"decompose", "p + n split and root decomposition", cmd_decompose},
      {"sigma", "the conjugation sigma on gl(4|1)", cmd_sigma},
      {"xi", "group conjugation xi on a 4|1 supermatrix or big-cell point", cmd_xi},
      {"plucker", "Pluecker coordinates of a plane in C^4", cmd_plucker},
      {"klein-check", "test the Klein relation", cmd_klein_check},
      {"cone", "big cell / cone at infinity classification", cmd_cone},
      {"act-poincare", "A -> N + R A L^-1 (or the real form)", cmd_act_poincare},
      {"pi", "big-cell chart of a 4|1 supermatrix", cmd_pi},
      {"act-super", "super Poincare action on the big cell", cmd_act_super},
      {"twistor-check", "test A = B + beta alpha", cmd_twistor_check},
      {"real-coords", "real coordinates A' = A + (j/2) alpha^dag alpha", cmd_real_coords},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> handlers;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", o.input, "JSON input file, '-' for stdin");
    handlers.emplace_back(sub, &s);
  }
  CLI::App* roots = app.add_subcommand("roots", "roots and dimension of a block pattern");
  roots->add_option("pattern", o.argument, "p, n, n0, n1, l0, h, p1 .. p4")->required();
  CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", o.argument, "all, grassmann, berezinian, liesuper, realform, geometry, superflag")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (roots->parsed()) return cmd_roots(o);
    if (verify->parsed()) return cmd_verify(make_context(o, false), o);
    for (auto& [sub, s] : handlers)
      if (sub->parsed()) {
        Context c = make_context(o, true);
        return s->run(c, o);
      }
  } catch (const MathDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathDomain;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
