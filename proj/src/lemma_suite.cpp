#include "smoothlab/lemma_suite.hpp"

#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>

#include "smoothlab/approx.hpp"
#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"
#include "smoothlab/norms.hpp"
#include "smoothlab/parallel.hpp"
#include "smoothlab/quadrature.hpp"
#include "smoothlab/smoothness.hpp"
#include "smoothlab/translation.hpp"

namespace smoothlab {

namespace {

const std::vector<double> kGrid9{-0.95, -0.7, -0.4, -0.1, 0.0, 0.2, 0.5, 0.8, 0.95};

std::vector<double> grid17() {
  std::vector<double> x;
  for (int k = 0; k < 17; ++k) x.push_back(-0.96 + 0.12 * k);
  return x;
}

struct Check {
  std::string id;
  double tolerance;
  std::function<double()> run;
};

FuncRep random_poly(std::uint64_t seed, int degree) { return FuncRep::monomial(random_poly_coeffs(seed, degree)); }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// int_0^t A(v)^{-1} int_0^v g(u) A(u) du dv by nested Gauss-Legendre.
double sl_double_integral(const std::function<double(double)>& g, double t, int order) {
  auto rule = cached_rule(RuleKind::GaussLegendre, order);
  double outer = 0.0;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    const double v = 0.5 * t * (rule->nodes[i] + 1.0);
    double inner = 0.0;
    for (std::size_t j = 0; j < rule->nodes.size(); ++j) {
      const double u = 0.5 * v * (rule->nodes[j] + 1.0);
      inner += rule->weights[j] * g(u) * SLWeight::A(u);
    }
    outer += rule->weights[i] * 0.5 * v * inner / SLWeight::A(v);
  }
  return 0.5 * t * outer;
}

std::vector<Check> build_checks(const LemmaSuiteOptions& opt) {
  const std::uint64_t s = opt.seed;
  TranslationConfig tc;
  tc.kernel_perturbation = opt.kernel_perturbation;
  TranslationConfig yc = tc;
  yc.form = TranslationForm::YForm;
  HOptions hint;
  hint.method = HMethod::Integral;
  hint.translation = tc;
  HOptions hmul;
  hmul.translation = tc;
  const std::vector<int> rs = opt.r_values;
  const std::vector<double> x17 = grid17();

  std::vector<Check> c;

  c.push_back({"translation.zero_shift_identity", 1e-9, [=] {
                 FuncRep f = random_poly(s, 10);
                 double e = 0.0;
                 for (double x : x17) e = std::max(e, std::abs(translate_t(f, 0.0, x, tc) - f(x)));
                 return e;
               }});
  c.push_back({"translation.constant_fixed", 1e-9, [=] {
                 FuncRep one = FuncRep::constant(1.0);
                 double e = 0.0;
                 for (double y : kGrid9)
                   for (double x : kGrid9) e = std::max(e, std::abs(translate(one, y, x, yc) - 1.0));
                 return e;
               }});
  c.push_back({"translation.product_formula", 1e-7, [=] {
                 double e = 0.0;
                 for (int n = 0; n <= 12; ++n) {
                   std::vector<double> b(n + 1, 0.0);
                   b[n] = 1.0;
                   FuncRep R = FuncRep::jacobi(b);
                   for (double y : kGrid9)
                     for (double x : kGrid9)
                       e = std::max(e, std::abs(translate(R, y, x, yc) - eval_R(n, 2, 2, x) * y_multiplier(n, y)));
                 }
                 return e;
               }});
  c.push_back({"translation.multiplier", 1e-7, [=] {
                 FuncRep f = random_poly(s, 10);
                 FourierOptions fo;
                 fo.quad_order = 32;
                 fo.self_check = false;
                 std::vector<double> a = fourier_jacobi(f, 10, fo);
                 double e = 0.0;
                 for (double y : {-0.7, 0.1, 0.6}) {
                   FuncRep tf = FuncRep::callable([&](double x) { return translate(f, y, x, yc); });
                   std::vector<double> at = fourier_jacobi(tf, 10, fo);
                   for (int n = 0; n <= 10; ++n) e = std::max(e, std::abs(at[n] - a[n] * y_multiplier(n, y)));
                 }
                 return e;
               }});
  c.push_back({"translation.self_adjoint", 1e-7, [=] {
                 FuncRep f = random_poly(s + 1, 9), g = random_poly(s + 2, 8);
                 QuadratureRule rule = gauss_rule(RuleKind::GaussJacobi, 24, 2.0, 2.0);
                 double e = 0.0;
                 for (double y : {-0.5, 0.3, 0.8}) {
                   double lhs = rule.integrate([&](double x) { return f(x) * translate(g, y, x, yc); });
                   double rhs = rule.integrate([&](double x) { return g(x) * translate(f, y, x, yc); });
                   e = std::max(e, std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300}));
                 }
                 return e;
               }});
  c.push_back({"translation.even_in_t", 1e-7, [=] {
                 FuncRep f = random_poly(s + 3, 8);
                 FuncRep g = trial_function("abs1.5");
                 double e = 0.0;
                 for (double t : {0.3, 1.2, 2.7})
                   for (double x : kGrid9) {
                     e = std::max(e, std::abs(translate_t(f, -t, x, tc) - translate_t(f, t, x, tc)));
                     e = std::max(e, std::abs(translate_t(g, -t, x, tc) - translate_t(g, t, x, tc)));
                   }
                 return e;
               }});
  c.push_back({"translation.linear", 1e-9, [=] {
                 FuncRep f = random_poly(s + 4, 7), g = random_poly(s + 5, 5);
                 FuncRep h = 2.5 * f - g;
                 double e = 0.0;
                 for (double t : {0.4, 2.0})
                   for (double x : kGrid9)
                     e = std::max(e, std::abs(translate_t(h, t, x, tc) - 2.5 * translate_t(f, t, x, tc) +
                                              translate_t(g, t, x, tc)));
                 return e;
               }});
  c.push_back({"translation.forms_agree", 1e-9, [=] {
                 FuncRep f = random_poly(s + 6, 10);
                 double e = 0.0;
                 for (double t : {0.2, 1.1, 2.5})
                   for (double x : kGrid9) e = std::max(e, rel(translate(f, std::cos(t), x, yc), translate_t(f, t, x, tc)));
                 return e;
               }});
  c.push_back({"translation.commutes_with_D", 1e-6, [=] {
                 FuncRep f = random_poly(s + 7, 8);
                 FuncRep df = apply_D(f, 2, 2, 1);
                 std::vector<double> xs = cheb::interior_points(8), vx(9), vy(9);
                 double e = 0.0;
                 for (double y0 : {-0.4, 0.35})
                   for (double x0 : {-0.6, 0.1, 0.7}) {
                     double lhs = translate(df, y0, x0, yc);
                     for (int i = 0; i < 9; ++i) vx[i] = translate(f, y0, xs[i], yc);
                     double dx = cheb::eval(apply_D_cheb(cheb::interp_interior(vx), 2, 2), x0);
                     for (int i = 0; i < 9; ++i) vy[i] = translate(f, xs[i], x0, yc);
                     double dy = cheb::eval(apply_D_cheb(cheb::interp_interior(vy), 0, 4), y0);
                     e = std::max({e, rel(dx, lhs), rel(dy, lhs)});
                   }
                 return e;
               }});

  c.push_back({"smoothness.D_r_H_r", 1e-7, [=] {
                 FuncRep f = random_poly(s + 8, 12);
                 const double mean = c_coefficient(f, 1) / c_coefficient(f, 0);
                 double e = 0.0;
                 for (int r : rs) {
                   FuncRep lhs = apply_D(H_apply(f, r, hint), 2.0, 2.0, r);
                   e = std::max(e, weighted_norm(lhs - (f - FuncRep::constant(mean)), WeightedSpace(2.0, 1.0), 64));
                 }
                 return e;
               }});
  c.push_back({"smoothness.D_l_H_r", 1e-7, [=] {
                 FuncRep f = random_poly(s + 9, 12);
                 const double c0 = c_coefficient(f, 0);
                 double e = 0.0;
                 for (int r : rs) {
                   FuncRep Hr = H_apply(f, r, hint);
                   for (int l = 1; l < r; ++l) {
                     FuncRep lhs = apply_D(Hr, 2.0, 2.0, l);
                     FuncRep rest = H_apply(f, r - l, hmul);
                     const double shift = c_coefficient(f, r - l + 1) / c0;
                     for (double x : x17) e = std::max(e, rel(lhs(x), rest(x) - shift));
                   }
                 }
                 return e;
               }});
  c.push_back({"smoothness.H_delta_difference", 1e-6, [=] {
                 FuncRep f = random_poly(s + 10, 12);
                 const double mean = c_coefficient(f, 1) / c_coefficient(f, 0);
                 double e = 0.0;
                 for (int r : rs) {
                   FuncRep Hr = H_apply(f, r, hmul);
                   for (double delta : {0.3, 0.8}) {
                     FuncRep lhs = H_delta_apply(f, delta, r, hint);
                     DifferenceRequest req{std::vector<double>(r, delta)};
                     FuncRep diff = difference_function(Hr, req, tc);
                     const double k = std::pow(kappa(delta), -r);
                     for (double x : x17) e = std::max(e, rel(lhs(x), k * diff(x) + mean));
                   }
                 }
                 return e;
               }});
  c.push_back({"smoothness.D_r_H_delta_r", 1e-6, [=] {
                 FuncRep f = random_poly(s + 11, 12);
                 double e = 0.0;
                 for (int r : rs)
                   for (double delta : {0.3, 0.8}) {
                     FuncRep lhs = apply_D(H_delta_apply(f, delta, r, hint), 2.0, 2.0, r);
                     DifferenceRequest req{std::vector<double>(r, delta)};
                     FuncRep diff = difference_function(f, req, tc);
                     const double k = std::pow(kappa(delta), -r);
                     for (double x : x17) e = std::max(e, rel(lhs(x), k * diff(x)));
                   }
                 return e;
               }});
  c.push_back({"smoothness.translation_integral", 1e-6, [=] {
                 double e = 0.0;
                 for (int j = 0; j < 2; ++j) {
                   FuncRep f = random_poly(s + 12 + j, 8);
                   FuncRep df = apply_D(f, 2.0, 2.0, 1);
                   for (double t : {0.4, 1.0})
                     for (double x : x17) {
                       double lhs = translate_t(f, t, x, tc) - f(x);
                       double rhs = sl_double_integral([&](double u) { return translate_t(df, u, x, tc); }, t, 24);
                       e = std::max(e, rel(lhs, rhs));
                     }
                 }
                 return e;
               }});
  c.push_back({"smoothness.H_delta_routes", 1e-5, [=] {
                 FuncRep f = random_poly(s + 14, 6);
                 double e = 0.0;
                 for (int r : rs)
                   for (double delta : {0.3, 0.8}) e = std::max(e, H_delta_method_gap(f, delta, r, 16, hmul));
                 return e;
               }});
  c.push_back({"smoothness.kappa_small_delta", 5e-3, [] { return std::abs(kappa(0.01) / 1e-4 - 0.25) / 0.25; }});
  c.push_back({"smoothness.H_vanishes_at_origin", 1e-12, [=] {
                 FuncRep f = random_poly(s + 15, 8);
                 double e = 0.0;
                 for (int r : rs) e = std::max({e, std::abs(H_apply(f, r, hmul)(0.0)), std::abs(H_apply(f, r, hint)(0.0))});
                 return e;
               }});

  const std::vector<WeightedSpace> spaces{WeightedSpace(2.0, 1.0), WeightedSpace(WeightedSpace::kInf, 1.0)};
  c.push_back({"approx.value_is_error_norm", 1e-9, [=] {
                 FuncRep f = trial_function("abs1.5");
                 double e = 0.0;
                 for (const auto& sp : spaces)
                   for (int n : {3, 8}) {
                     ApproxResult a = best_approx(f, n, sp);
                     e = std::max(e, std::abs(a.value - weighted_norm(f - a.poly, sp, sp.p_inf() ? 2049 : 1024)) / a.value);
                   }
                 return e;
               }});
  c.push_back({"approx.nonincreasing", 1e-9, [=] {
                 FuncRep f = trial_function("abs1.5");
                 double e = 0.0;
                 for (const auto& sp : spaces) {
                   double prev = best_approx(f, 1, sp).value;
                   for (int n = 2; n <= 10; ++n) {
                     double v = best_approx(f, n, sp).value;
                     e = std::max(e, (v - prev) / prev);
                     prev = v;
                   }
                 }
                 return e;
               }});
  c.push_back({"approx.shift_invariance", 1e-9, [=] {
                 FuncRep f = trial_function("abs1.5");
                 FuncRep P = random_poly(s + 16, 3);
                 double e = 0.0;
                 for (const auto& sp : spaces)
                   for (int n : {4, 9}) e = std::max(e, std::abs(best_approx(f + P, n, sp).value - best_approx(f, n, sp).value));
                 return e;
               }});
  c.push_back({"approx.parseval", 1e-9, [=] {
                 std::vector<double> b = random_poly_coeffs(s + 17, 10);
                 FuncRep f = FuncRep::jacobi(b);
                 JacobiBasis basis(2.0, 2.0, 10);
                 double e = 0.0;
                 for (int n = 1; n <= 10; ++n) {
                   double tail = 0.0;
                   for (int k = n; k <= 10; ++k) tail += b[k] * b[k] * basis.norm_sq()[k];
                   e = std::max(e, std::abs(best_approx(f, n, WeightedSpace(2.0, 1.0)).value - std::sqrt(tail)));
                 }
                 return e;
               }});
  // Deficit of the alternation count below n + 1 (0 when certified).
  c.push_back({"approx.alternation", 0.0, [=] {
                 double deficit = 0.0;
                 for (const char* name : {"abs1.5", "exp"})
                   for (int n : {2, 6, 12}) {
                     ApproxResult a = best_approx(trial_function(name), n, WeightedSpace(WeightedSpace::kInf, 1.0));
                     deficit = std::max(deficit, static_cast<double>(n + 1 - a.alternations));
                     if (!a.converged) deficit = std::max(deficit, 1.0);
                   }
                 return deficit;
               }});
  return c;
}

}  // namespace

bool LemmaReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const LemmaCheck* LemmaReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.lemma_id == id) return &c;
  return nullptr;
}

std::string LemmaReport::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["kernel_perturbation"] = kernel_perturbation;
  j["all_pass"] = all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["lemma_id"] = c.lemma_id;
    if (std::isfinite(c.max_error))
      e["max_error"] = c.max_error;
    else
      e["max_error"] = nullptr;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    if (!c.note.empty()) e["note"] = c.note;
    j["checks"].push_back(e);
  }
  return j.dump(2) + "\n";
}

LemmaReport run_lemma_suite(const LemmaSuiteOptions& opt) {
  if (opt.r_values.empty()) fail_validation("lemma suite: no r values requested");
  for (int r : opt.r_values)
    if (r < 1 || r > 3) fail_validation("lemma suite: r must be 1, 2 or 3 (got " + std::to_string(r) + ")");
  if (!std::isfinite(opt.kernel_perturbation)) fail_validation("lemma suite: kernel perturbation must be finite");

  std::vector<Check> checks = build_checks(opt);
  LemmaReport report;
  report.seed = opt.seed;
  report.kernel_perturbation = opt.kernel_perturbation;
  report.checks.resize(checks.size());
  parallel_for(checks.size(), [&](std::size_t i) {
    LemmaCheck& out = report.checks[i];
    out.lemma_id = checks[i].id;
    out.tolerance = checks[i].tolerance;
    try {
      out.max_error = checks[i].run();
      out.pass = std::isfinite(out.max_error) && out.max_error <= out.tolerance;
    } catch (const std::exception& e) {
      out.max_error = std::numeric_limits<double>::quiet_NaN();
      out.pass = false;
      out.note = e.what();
    }
  });
  return report;
}

}  // namespace smoothlab
