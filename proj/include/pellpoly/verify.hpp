#ifndef PELLPOLY_VERIFY_HPP
#define PELLPOLY_VERIFY_HPP

// The full exact battery for one configuration.

#include "curve.hpp"
#include "family.hpp"
#include "ode.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pellpoly {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // failing index, skip reason, or a note
  long cases = 0;

  CheckResult() = default;
  explicit CheckResult(std::string name_, CheckStatus status_ = CheckStatus::Pass, std::string detail_ = {},
                       long cases_ = 0)
      : name(std::move(name_)), status(status_), detail(std::move(detail_)), cases(cases_) {}
};

struct VerifyReport {
  long n = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

namespace detail {

/// Runs pred(k) for k in [lo, hi]; stops at the first failure.
inline CheckResult range_check(std::string name, long lo, long hi, const std::function<bool(long)>& pred) {
  CheckResult r{std::move(name)};
  for (long k = lo; k <= hi; ++k) {
    ++r.cases;
    if (!pred(k)) {
      r.status = CheckStatus::Fail;
      r.detail = "fails at n=" + std::to_string(k);
      return r;
    }
  }
  return r;
}

inline CheckResult skipped(std::string name, std::string reason) {
  return CheckResult{std::move(name), CheckStatus::Skipped, std::move(reason), 0};
}

}  // namespace detail

/// Annihilation of a_k (or b_k) for k <= n, with the shifted index k+1 as a
/// negative control. Uses the coefficients as displayed when they annihilate
/// and the pulled-back operator otherwise; the detail records which.
inline CheckResult check_ode(const PellFamily& fam, long n, OdeKind kind) {
  const bool is_a = kind == OdeKind::GeneralA || kind == OdeKind::DjkmA;
  const bool general = kind == OdeKind::GeneralA || kind == OdeKind::GeneralB;
  auto y = [&](long k) { return is_a ? fam.a(k) : fam.b(k); };
  auto build = [&](long k, OdeForm form) {
    return general ? build_general(fam.cfg(), k, kind, form) : build_djkm(fam.cfg(), k, kind, form);
  };
  CheckResult r{"ode_" + to_string(kind)};
  bool displayed_ok = true;
  for (long k = 0; k <= n && displayed_ok; ++k) displayed_ok = apply(build(k, OdeForm::Printed), y(k)).is_zero();
  OdeForm form = displayed_ok ? OdeForm::Printed : OdeForm::Derived;
  r.detail = displayed_ok ? "displayed coefficients" : "displayed coefficients fail; pulled-back operator used";
  for (long k = 0; k <= n; ++k) {
    ++r.cases;
    OdeOperator op = build(k, form);
    if (!apply(op, y(k)).is_zero()) {
      r.status = CheckStatus::Fail;
      r.detail = "does not annihilate at n=" + std::to_string(k);
      return r;
    }
    if (apply(op, y(k + 1)).is_zero()) {
      r.status = CheckStatus::Fail;
      r.detail = "negative control vanishes at n=" + std::to_string(k);
      return r;
    }
  }
  return r;
}

/// Every exact identity for indices up to n (n >= 2).
inline VerifyReport run_verification(const PellConfigPtr& cfg, long n) {
  if (n < 2) throw std::invalid_argument("verification needs n >= 2");
  using detail::range_check;
  using detail::skipped;
  const PellConfig& c = *cfg;
  PellFamily fam(cfg);
  fam.extend(2 * n + 2);
  VerifyReport rep;
  rep.n = n;
  auto& out = rep.checks;

  out.push_back(range_check("pell_identity", 0, n, [&](long k) { return verify_pell(fam, k); }));
  out.push_back(range_check("power_of_fundamental_unit", 0, n, [&](long k) { return check_power_oracle(fam, k); }));
  out.push_back(range_check("closed_forms", 0, n, [&](long k) { return verify_closed_forms(fam, k); }));

  GeneratingFunctionReport gf = verify_generating_functions(fam, static_cast<int>(n));
  auto gf_check = [&](std::string name, bool a, bool b) {
    CheckResult r{std::move(name), a && b ? CheckStatus::Pass : CheckStatus::Fail};
    r.cases = 2;
    if (!a || !b) r.detail = !a ? "a-series fails" : "b-series fails";
    out.push_back(r);
  };
  gf_check("generating_function_ordinary", gf.ordinary_a, gf.ordinary_b);
  gf_check("generating_function_at_one", gf.unit_sums_a, gf.unit_sums_b);
  gf_check("generating_function_logarithmic", gf.logarithmic_a, gf.logarithmic_b);
  gf_check("generating_function_exponential", gf.exponential_a, gf.exponential_b);

  out.push_back(range_check("turan", 1, n, [&](long k) { return verify_turan(fam, k); }));
  {
    CheckResult r{"products"};
    for (long m = 0; m <= n && r.status == CheckStatus::Pass; ++m)
      for (long k = 0; k <= m; ++k) {
        ++r.cases;
        if (!verify_products(fam, m, k)) {
          r.status = CheckStatus::Fail;
          r.detail = "fails at (m,n)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
          break;
        }
      }
    out.push_back(r);
  }
  out.push_back(range_check("summations", 1, n, [&](long k) { return verify_summations(fam, k); }));
  out.push_back(range_check("growth", 0, n, [&](long k) { return verify_growth(fam, k); }));

  const bool has_r = c.r.has_value();
  const std::string no_r = "a1^2 - b0^2 p is not t^{2r}";
  if (has_r) {
    out.push_back(range_check("chebyshev_hypergeometric", 0, n, [&](long k) { return verify_chebyshev_connection(fam, k); }));
    out.push_back(range_check("jacobi_ultraspherical", 0, n, [&](long k) { return verify_jacobi_connection(fam, k); }));
    out.push_back(range_check("tridiagonal_determinant", 0, n, [&](long k) { return verify_determinant(fam, k); }));
  } else {
    for (auto name : {"chebyshev_hypergeometric", "jacobi_ultraspherical", "tridiagonal_determinant"})
      out.push_back(skipped(name, no_r));
  }
  if (!has_r) {
    out.push_back(skipped("rodrigues", no_r));
  } else if (!c.b0_constant()) {
    out.push_back(skipped("rodrigues", "b0 is not constant"));
  } else if (AlgFuncField(c.a1, *c.r).derivation_degenerate()) {
    out.push_back(skipped("rodrigues", "t a1' - r a1 vanishes"));
  } else {
    out.push_back(range_check("rodrigues", 0, n, [&](long k) { return verify_rodrigues(fam, k); }));
  }

  if (c.is_djkm())
    out.push_back(range_check("endpoint_values", 0, n, [&](long k) { return endpoint_values(fam, k).matches(); }));
  else
    out.push_back(skipped("endpoint_values", "not a DJKM configuration"));

  bool derivation_ok = has_r && !AlgFuncField(c.a1, *c.r).derivation_degenerate();
  if (derivation_ok) {
    out.push_back(check_ode(fam, n, OdeKind::GeneralA));
    if (c.b0_constant()) out.push_back(check_ode(fam, n, OdeKind::GeneralB));
    else out.push_back(skipped("ode_general_b", "b0 is not constant"));
  } else {
    out.push_back(skipped("ode_general_a", has_r ? "t a1' - r a1 vanishes" : no_r));
    out.push_back(skipped("ode_general_b", has_r ? "t a1' - r a1 vanishes" : no_r));
  }

  if (c.is_djkm()) {
    out.push_back(check_ode(fam, n, OdeKind::DjkmA));
    out.push_back(check_ode(fam, n, OdeKind::DjkmB));
    out.push_back(range_check("fuchsian", 0, n, [&](long k) {
      return classify_fuchsian(build_djkm(c, k, OdeKind::DjkmA)).fuchsian &&
             classify_fuchsian(build_djkm(c, k, OdeKind::DjkmA, OdeForm::Derived)).fuchsian &&
             classify_fuchsian(build_djkm(c, k, OdeKind::DjkmB)).fuchsian;
    }));
    UnitRelationReport u = check_unit_relations(cfg);
    CheckResult r{"unit_relations", u.all() ? CheckStatus::Pass : CheckStatus::Fail};
    r.cases = 5;
    r.detail = "lambda1 conj(lambda2) compared with conj(lambda3)";
    if (u.l1_conj_l2_unconjugated) r.detail += "; also equals lambda3";
    out.push_back(r);
  } else {
    for (auto name : {"ode_djkm_a", "ode_djkm_b", "fuchsian", "unit_relations"})
      out.push_back(skipped(name, "not a DJKM configuration"));
  }
  return rep;
}

}  // namespace pellpoly

#endif  // PELLPOLY_VERIFY_HPP
