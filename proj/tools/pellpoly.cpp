// pellpoly: command-line front end.
//
// Exit status: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// configuration error.

#include "pellpoly/curve.hpp"
#include "pellpoly/family.hpp"
#include "pellpoly/ode.hpp"
#include "pellpoly/parse.hpp"
#include "pellpoly/quad.hpp"
#include "pellpoly/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::json;
using namespace pellpoly;

namespace {

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct ConfigArgs {
  std::string beta;
  std::string p, a1, b0;
  std::string sigma1 = "1", sigma2 = "1";

  void add_to(CLI::App* cmd, bool custom_allowed) {
    auto* b = cmd->add_option("--beta", beta, "DJKM parameter, exact rational \"n\" or \"n/d\"");
    if (!custom_allowed) {
      b->required();
      return;
    }
    auto* op = cmd->add_option("--p", p, "custom p(t)");
    auto* oa = cmd->add_option("--a1", a1, "custom a1(t)");
    auto* ob = cmd->add_option("--b0", b0, "custom b0(t)");
    cmd->add_option("--sigma1", sigma1, "s1^2 for custom coefficients");
    cmd->add_option("--sigma2", sigma2, "s2^2 for custom coefficients");
    b->excludes(op)->excludes(oa)->excludes(ob);
    op->needs(oa)->needs(ob);
    oa->needs(op);
    ob->needs(op);
  }

  PellConfigPtr build() const {
    if (!beta.empty()) return djkm_config(parse_rational(beta));
    if (p.empty()) throw config_error("give --beta or --p/--a1/--b0");
    auto ctx = make_tower(parse_rational(sigma1), parse_rational(sigma2));
    return custom_config(parse_laurent(p, ctx), parse_laurent(a1, ctx), parse_laurent(b0, ctx));
  }
};

json config_json(const PellConfig& c) {
  json j;
  if (c.beta) {
    j["beta"] = c.beta->get_str();
  } else {
    j["p"] = c.p.to_string();
    j["a1"] = c.a1.to_string();
    j["b0"] = c.b0.to_string();
  }
  j["sigma1"] = c.tower->sigma1.get_str();
  j["sigma2"] = c.tower->sigma2.get_str();
  j["r"] = c.r ? json(*c.r) : json(nullptr);
  j["pell_norm"] = c.pell_norm.to_string();
  return j;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json quad_json(const QuadResult& q) {
  return {{"value", q.value},
          {"abs_error_estimate", q.abs_error_estimate},
          {"nodes_used", q.nodes_used},
          {"method", to_string(q.method)},
          {"converged", q.converged}};
}

/// Exact rational beta when the text parses as one, otherwise a float.
double parse_float_beta(const std::string& s) {
  try {
    return parse_rational(s).get_d();
  } catch (const parse_error&) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw parse_error("bad beta \"" + s + "\"");
    return v;
  }
}

int cmd_gen(const ConfigArgs& args, long n, const std::string& format) {
  PellFamily fam(args.build());
  fam.extend(n);
  if (format == "text") {
    for (long k = 0; k <= n; ++k)
      std::cout << "a_" << k << " = " << fam.a(k).to_string() << "\nb_" << k << " = " << fam.b(k).to_string() << '\n';
    return kPass;
  }
  json out = json::array();
  for (long k = 0; k <= n; ++k) out.push_back({{"n", k}, {"a_n", fam.a(k).to_string()}, {"b_n", fam.b(k).to_string()}});
  std::cout << out.dump(2) << '\n';
  return kPass;
}

int cmd_verify(const ConfigArgs& args, long n, const std::string& format) {
  PellConfigPtr cfg = args.build();
  VerifyReport rep = run_verification(cfg, n);
  if (format == "text") {
    for (const auto& c : rep.checks) {
      std::cout << c.name << ": " << to_string(c.status);
      if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
      std::cout << '\n';
    }
    std::cout << (rep.all_pass() ? "all checks pass" : "some checks failed") << '\n';
  } else {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"cases", c.cases}});
    json out{{"config", config_json(*cfg)}, {"n", n}, {"checks", checks}, {"all_pass", rep.all_pass()}};
    std::cout << out.dump(2) << '\n';
  }
  return rep.all_pass() ? kPass : kMathFailure;
}

int cmd_ortho(const std::string& beta_text, long n_max, const std::string& kind, const std::string& method,
              double tol, long nodes, const std::string& format) {
  double beta = parse_float_beta(beta_text);
  OrthoOptions opt;
  opt.gauss = method != "tanhsinh";
  opt.tanh_sinh = method != "gauss";
  opt.tol = tol;
  opt.gauss_nodes = nodes;
  std::vector<OrthoTable> tables;
  if (kind != "second") tables.push_back(ortho_table(beta, Kernel::First, n_max, opt));
  if (kind != "first") tables.push_back(ortho_table(beta, Kernel::Second, n_max, opt));
  const double value_tol = std::max(1e-10, 10 * tol);
  bool ok = true;
  for (const auto& t : tables) ok = ok && t.max_abs_err() < value_tol && t.max_method_gap() < 1e-9;
  if (format == "csv") {
    std::cout << ortho_csv_header() << '\n';
    for (const auto& t : tables) std::cout << ortho_csv_rows(t);
  } else {
    json out{{"beta", beta}, {"n_max", n_max}, {"pass", ok}};
    json jt = json::array();
    for (const auto& t : tables) {
      json cells = json::array();
      for (const auto& c : t.cells) {
        json cell{{"n", c.n}, {"m", c.m}, {"expected", c.expected}, {"abs_err", c.abs_err()}};
        if (c.has_gauss) cell["gauss"] = quad_json(c.gauss);
        if (c.has_tanh_sinh) cell["tanh_sinh"] = quad_json(c.tanh_sinh);
        cells.push_back(cell);
      }
      jt.push_back({{"kind", to_string(t.kind)},
                    {"cells", cells},
                    {"max_abs_err", t.max_abs_err()},
                    {"max_method_gap", t.max_method_gap()}});
    }
    out["tables"] = jt;
    std::cout << out.dump(2) << '\n';
  }
  return ok ? kPass : kMathFailure;
}

int cmd_ode(const ConfigArgs& args, long n, const std::string& kind_text) {
  PellConfigPtr cfg = args.build();
  OdeKind kind;
  if (kind_text == "general_a") kind = OdeKind::GeneralA;
  else if (kind_text == "general_b") kind = OdeKind::GeneralB;
  else if (kind_text == "djkm_a") kind = OdeKind::DjkmA;
  else kind = OdeKind::DjkmB;
  const bool a_side = kind == OdeKind::GeneralA || kind == OdeKind::DjkmA;
  PellFamily fam(cfg);
  fam.extend(n + 1);
  const LaurentPoly& y = a_side ? fam.a(n) : fam.b(n);
  const LaurentPoly& shifted = a_side ? fam.a(n + 1) : fam.b(n + 1);

  const bool general = kind == OdeKind::GeneralA || kind == OdeKind::GeneralB;
  auto build = [&](OdeForm f) { return general ? build_general(*cfg, n, kind, f) : build_djkm(*cfg, n, kind, f); };
  OdeOperator op = build(OdeForm::Printed);
  std::string form = "displayed";
  if (!apply(op, y).is_zero()) {
    op = build(OdeForm::Derived);
    form = "pulled_back";
  }
  bool annihilates = apply(op, y).is_zero();
  SingularReport rep = classify_fuchsian(op);
  json factors = json::array();
  for (const auto& f : rep.finite_factors)
    factors.push_back({{"factor", f.factor.to_string()}, {"multiplicity", f.multiplicity}, {"regular", f.regular}});
  json points = json::array();
  for (auto z : singular_points_numeric(op)) points.push_back(complex_json(z));
  json out{{"kind", to_string(kind)},
           {"n", n},
           {"beta", cfg->beta ? json(cfg->beta->get_str()) : json(nullptr)},
           {"config", config_json(*cfg)},
           {"form", form},
           {"coefficients", {{"c2", op.c2.to_string()}, {"c1", op.c1.to_string()}, {"c0", op.c0.to_string()}}},
           {"annihilates", annihilates},
           {"negative_control_nonzero", !apply(op, shifted).is_zero()},
           {"fuchsian", rep.fuchsian},
           {"infinity_regular", rep.infinity_regular},
           {"degrees", {{"c2", rep.deg_c2}, {"c1", rep.deg_c1}, {"c0", rep.deg_c0}}},
           {"singular_factors", factors},
           {"singular_points", points}};
  std::cout << out.dump(2) << '\n';
  return annihilates ? kPass : kMathFailure;
}

int cmd_units(const ConfigArgs& args, long bound) {
  PellConfigPtr cfg = args.build();
  DjkmUnits u = djkm_units(cfg);
  UnitRelationReport rel = check_unit_relations(cfg);
  auto ok = [](bool b) { return b ? "ok" : "fail"; };
  json relations{{"lambda0_norm_is_1", ok(rel.l0_norm)},
                 {"lambda1_norm_is_t^2", ok(rel.l1_norm)},
                 {"lambda2_norm_is_t^2", ok(rel.l2_norm)},
                 {"lambda1_lambda2_is_t^2_lambda0", ok(rel.l1_l2)},
                 {"lambda1_conj_lambda2_is_conj_lambda3", ok(rel.l1_conj_l2)}};
  json lambdas = json::array();
  for (std::size_t i = 0; i < 4; ++i) lambdas.push_back(u[i].to_string());

  LaurentPoly t2 = LaurentPoly::monomial(cfg->tower, 2);
  std::vector<std::pair<std::string, CurveElem>> samples{{"conj(lambda2)", u[2].conj()},
                                                          {"lambda2^-1", pow(u[2], -1)},
                                                          {"t^2*lambda0", u[0] * t2},
                                                          {"lambda3", u[3]}};
  json forms;
  for (const auto& [name, x] : samples) {
    auto e = unit_exponent_form(x, bound);
    forms[name] = e ? json{{"c", e->c.to_string()}, {"i", e->i}, {"j", e->j}, {"k", e->k}} : json(nullptr);
  }
  json out{{"config", config_json(*cfg)},
           {"lambda", lambdas},
           {"relations", relations},
           {"lambda1_conj_lambda2_is_lambda3", rel.l1_conj_l2_unconjugated},
           {"exponent_forms", forms},
           {"all_ok", rel.all()}};
  std::cout << out.dump(2) << '\n';
  return rel.all() ? kPass : kMathFailure;
}

int cmd_elliptic(const std::string& beta_text, std::optional<long> n, std::optional<long> m, double tol) {
  double beta = parse_float_beta(beta_text);
  std::vector<std::pair<long, long>> pairs;
  if (n && m) pairs.emplace_back(*n, *m);
  else pairs = {{0, 1}, {1, 2}, {2, 3}};
  json checks = json::array();
  bool all = true;
  for (auto [i, j] : pairs) {
    EllipticCheck c = elliptic_identity_check(beta, i, j, tol);
    all = all && c.passes();
    checks.push_back({{"n", i}, {"m", j}, {"first", quad_json(c.first)}, {"second", quad_json(c.second)},
                      {"passes", c.passes()}});
  }
  json out{{"beta", beta}, {"tol", tol}, {"checks", checks}, {"all_pass", all}};
  std::cout << out.dump(2) << '\n';
  return all ? kPass : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pell-equation polynomial families over the DJKM curve"};
  app.require_subcommand(1);

  ConfigArgs gen_args, verify_args, ode_args, units_args;
  long n = 8;
  std::string format = "json";

  auto* gen = app.add_subcommand("gen", "print a_n and b_n up to n");
  gen_args.add_to(gen, true);
  gen->add_option("--n", n, "largest index")->check(CLI::NonNegativeNumber);
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  long verify_n = 16;
  std::string verify_format = "json";
  auto* verify = app.add_subcommand("verify", "run every exact identity up to n");
  verify_args.add_to(verify, true);
  verify->add_option("--n", verify_n, "largest index")->check(CLI::Range(2L, 200L));
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

  std::string ortho_beta, ortho_kind = "both", ortho_method = "both", ortho_format = "csv";
  long ortho_nmax = 8, ortho_nodes = 0;
  double ortho_tol = 1e-12;
  auto* ortho = app.add_subcommand("ortho", "orthogonality Gram matrices");
  ortho->add_option("--beta", ortho_beta, "beta > 1, rational or float")->required();
  ortho->add_option("--nmax", ortho_nmax)->check(CLI::NonNegativeNumber);
  ortho->add_option("--kind", ortho_kind)->check(CLI::IsMember({"first", "second", "both"}));
  ortho->add_option("--method", ortho_method)->check(CLI::IsMember({"gauss", "tanhsinh", "both"}));
  ortho->add_option("--tol", ortho_tol, "tanh-sinh level tolerance (>= 1e-12)");
  ortho->add_option("--nodes", ortho_nodes, "Gauss nodes (default nmax + 2)")->check(CLI::NonNegativeNumber);
  ortho->add_option("--format", ortho_format)->check(CLI::IsMember({"csv", "json"}));

  long ode_n = 4;
  std::string ode_kind = "djkm_b";
  auto* ode = app.add_subcommand("ode", "build, apply and classify a second-order operator");
  ode_args.add_to(ode, true);
  ode->add_option("--n", ode_n)->check(CLI::NonNegativeNumber);
  ode->add_option("--kind", ode_kind)->check(CLI::IsMember({"general_a", "general_b", "djkm_a", "djkm_b"}));

  long units_bound = 3;
  auto* units = app.add_subcommand("units", "relations among the DJKM units");
  units_args.add_to(units, false);
  units->add_option("--bound", units_bound, "exponent search box")->check(CLI::NonNegativeNumber);

  std::string ell_beta;
  std::optional<long> ell_n, ell_m;
  double ell_tol = 1e-10;
  auto* ell = app.add_subcommand("elliptic", "vanishing elliptic integrals for n + m odd");
  ell->add_option("--beta", ell_beta)->required();
  auto* on = ell->add_option("--n", ell_n);
  auto* om = ell->add_option("--m", ell_m);
  on->needs(om);
  om->needs(on);
  ell->add_option("--tol", ell_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_args, n, format);
    if (*verify) return cmd_verify(verify_args, verify_n, verify_format);
    if (*ortho) return cmd_ortho(ortho_beta, ortho_nmax, ortho_kind, ortho_method, ortho_tol, ortho_nodes, ortho_format);
    if (*ode) return cmd_ode(ode_args, ode_n, ode_kind);
    if (*units) return cmd_units(units_args, units_bound);
    if (*ell) return cmd_elliptic(ell_beta, ell_n, ell_m, ell_tol);
  } catch (const std::invalid_argument& e) {  // parse_error, config_error, bad preconditions
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
