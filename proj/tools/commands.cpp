#include "commands.hpp"

#include <cmath>

#include "smoothlab/approx.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/kfunctional.hpp"
#include "smoothlab/lemma_suite.hpp"
#include "smoothlab/smoothness.hpp"
#include "smoothlab/translation.hpp"
#include "smoothlab/trial_family.hpp"
#include "smoothlab/verify.hpp"

namespace smoothlab::cli {

namespace {

int single_r(const RunConfig& cfg) {
  if (cfg.r.size() != 1) fail_validation(cfg.command + " takes a single r");
  return cfg.r[0];
}

ModulusOptions modulus_options(const RunConfig& cfg) {
  ModulusOptions o;
  o.t_grid = cfg.t_grid;
  o.x_resolution = cfg.x_resolution;
  return o;
}

ApproxOptions approx_options(const RunConfig& cfg) {
  ApproxOptions o;
  o.grid_size = cfg.grid_size;
  o.quad_order = cfg.quad_order;
  return o;
}

KFunctionalOptions kfunc_options(const RunConfig& cfg) {
  KFunctionalOptions o;
  o.search_degree = cfg.search_degree;
  o.resolution = cfg.quad_order;
  return o;
}

CommandOutput modulus_cmd(const RunConfig& cfg) {
  FuncRep f = parse_function(cfg.function, cfg.seed);
  ModulusEngine engine(f, cfg.space(), modulus_options(cfg));
  CommandOutput out;
  out.document = "r,delta,omega,omega_refined,converged,argmax_t\n";
  for (int r : cfg.r) {
    for (double d : cfg.delta) {
      ModulusResult m = engine.compute(r, d);
      std::string arg;
      for (std::size_t j = 0; j < m.argmax_t.size(); ++j) arg += (j ? ";" : "") + fmt17(m.argmax_t[j]);
      out.document += std::to_string(r) + "," + fmt17(d) + "," + fmt17(m.value) + "," + fmt17(m.refined_value) + "," +
                      (m.converged ? "1" : "0") + "," + arg + "\n";
      out.summary += "omega_" + std::to_string(r) + "(f, " + fmt17(d) + ") = " + fmt17(m.value) + "\n";
    }
  }
  return out;
}

CommandOutput kfunc_cmd(const RunConfig& cfg) {
  FuncRep f = parse_function(cfg.function, cfg.seed);
  CommandOutput out;
  out.document = "r,delta,K,fit_term,smooth_term,solver,lower_bound\n";
  for (int r : cfg.r) {
    for (double d : cfg.delta) {
      KFunctionalResult k = k_functional(f, r, d, cfg.space(), kfunc_options(cfg));
      out.document += std::to_string(r) + "," + fmt17(d) + "," + fmt17(k.value) + "," + fmt17(k.fit_term) + "," +
                      fmt17(k.smooth_term) + "," + k.solver + "," + fmt17(k.lower_bound) + "\n";
      out.summary += "K_" + std::to_string(r) + "(f, " + fmt17(d) + ") = " + fmt17(k.value) + "\n";
    }
  }
  return out;
}

CommandOutput bestapprox_cmd(const RunConfig& cfg) {
  FuncRep f = parse_function(cfg.function, cfg.seed);
  CommandOutput out;
  out.document = "n,E_n,iterations,certified_gap,alternations,converged\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    ApproxResult a = best_approx(f, n, cfg.space(), approx_options(cfg));
    out.document += std::to_string(n) + "," + fmt17(a.value) + "," + std::to_string(a.iterations) + "," +
                    fmt17(a.certified_gap) + "," + std::to_string(a.alternations) + "," + (a.converged ? "1" : "0") +
                    "\n";
    out.summary += "E_" + std::to_string(n) + "(f) = " + fmt17(a.value) + (a.converged ? "" : " (not converged)") + "\n";
  }
  return out;
}

CommandOutput translate_cmd(const RunConfig& cfg) {
  FuncRep f = parse_function(cfg.function, cfg.seed);
  TranslationConfig tc;
  if (cfg.quad_order > 0) tc.quad_order = cfg.quad_order;
  tc.form = cfg.form == "y" ? TranslationForm::YForm : TranslationForm::TForm;
  std::vector<double> xs = cfg.x;
  if (xs.empty())
    for (int k = 0; k < 17; ++k) xs.push_back(-0.96 + 0.12 * k);
  CommandOutput out;
  out.document = std::string(cfg.form == "y" ? "y" : "t") + ",x,tau\n";
  for (double x : xs) out.document += fmt17(cfg.t) + "," + fmt17(x) + "," + fmt17(translate(f, cfg.t, x, tc)) + "\n";
  out.summary = "translated at " + std::to_string(xs.size()) + " points\n";
  return out;
}

CommandOutput equivalence_cmd(const RunConfig& cfg) {
  EquivalenceOptions o;
  o.modulus = modulus_options(cfg);
  o.kfunctional = kfunc_options(cfg);
  RatioTable t = verify_equivalence(parse_function(cfg.function, cfg.seed), single_r(cfg), cfg.space(), cfg.delta, o);
  return {t.to_csv(), t.summary_text(), 0};
}

CommandOutput jackson_cmd(const RunConfig& cfg) {
  JacksonOptions o;
  o.n_min = cfg.n_min;
  o.modulus = modulus_options(cfg);
  o.approx = approx_options(cfg);
  RatioTable t = verify_jackson(parse_function(cfg.function, cfg.seed), single_r(cfg), cfg.space(), cfg.n_max, o);
  return {t.to_csv(), t.summary_text(), 0};
}

CommandOutput lemma_cmd(const RunConfig& cfg) {
  LemmaSuiteOptions o;
  o.seed = cfg.seed;
  o.r_values = cfg.r;
  o.kernel_perturbation = cfg.kernel_perturbation;
  LemmaReport rep = run_lemma_suite(o);
  CommandOutput out;
  out.document = rep.to_json();
  int failed = 0;
  for (const auto& c : rep.checks) failed += c.pass ? 0 : 1;
  out.summary = std::to_string(rep.checks.size() - failed) + "/" + std::to_string(rep.checks.size()) +
                " lemma checks passed\n";
  for (const auto& c : rep.checks)
    if (!c.pass) out.summary += "  FAIL " + c.lemma_id + ": " + fmt17(c.max_error) + " > " + fmt17(c.tolerance) + "\n";
  out.exit_code = failed == 0 ? 0 : 2;
  return out;
}

}  // namespace

CommandOutput run_command(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "modulus") return modulus_cmd(cfg);
  if (cfg.command == "kfunc") return kfunc_cmd(cfg);
  if (cfg.command == "bestapprox") return bestapprox_cmd(cfg);
  if (cfg.command == "translate") return translate_cmd(cfg);
  if (cfg.command == "verify-equivalence") return equivalence_cmd(cfg);
  if (cfg.command == "verify-jackson") return jackson_cmd(cfg);
  if (cfg.command == "lemma-suite") return lemma_cmd(cfg);
  fail_validation("unknown command '" + cfg.command + "'");
}

}  // namespace smoothlab::cli
