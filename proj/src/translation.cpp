#include "smoothlab/translation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"
#include "smoothlab/norms.hpp"
#include "smoothlab/quadrature.hpp"

namespace smoothlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEndpointOffset = 1e-6;

// s is the sine of the shift: +sqrt(1-y^2) in the y-form, sin t in the t-form.
KernelValue kernel(double y, double s, double x, double z) {
  const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
  double R = x * y - sx * s * z;
  R = std::clamp(R, -1.0, 1.0);
  const double inner = sx * y + x * z * s + sx * (1.0 - y) * (1.0 - z * z);
  return {R, 2.0 * inner * inner - (1.0 - R * R)};
}

double translate_interior_t(const FuncRep& f, double t, double x, const TranslationConfig& cfg) {
  const int m = cfg.quad_order;
  const double y = std::cos(t), s = std::sin(t);
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double phi = kPi * k / m;
    const double z = std::cos(phi);
    KernelValue kv = kernel(y, s, x, z);
    double w = (k == 0 || k == m) ? 0.5 : 1.0;
    sum += w * (kv.B + cfg.kernel_perturbation) * f(kv.R);
  }
  sum *= kPi / m;
  const double c = std::cos(0.5 * t);
  return sum / (kPi * (1.0 - x * x) * c * c * c * c);
}

double translate_interior_y(const FuncRep& f, double y, double x, const TranslationConfig& cfg) {
  auto rule = cached_rule(RuleKind::GaussChebyshev, cfg.quad_order);
  const double s = std::sqrt(std::max(0.0, 1.0 - y * y));
  double sum = 0.0;
  for (std::size_t k = 0; k < rule->nodes.size(); ++k) {
    KernelValue kv = kernel(y, s, x, rule->nodes[k]);
    sum += rule->weights[k] * (kv.B + cfg.kernel_perturbation) * f(kv.R);
  }
  return 4.0 * sum / (kPi * (1.0 - x * x) * (1.0 + y) * (1.0 + y));
}

template <class Interior>
double with_endpoint_rule(double x, Interior&& interior) {
  if (std::abs(x) > 1.0) fail_validation("translate: |x| must not exceed 1");
  if (std::abs(x) < 1.0) return interior(x);
  const double sign = x > 0 ? 1.0 : -1.0;
  const double f1 = interior(sign * (1.0 - kEndpointOffset));
  const double f2 = interior(sign * (1.0 - 2.0 * kEndpointOffset));
  return 2.0 * f1 - f2;
}

}  // namespace

void TranslationConfig::validate() const {
  if (quad_order < 16) fail_validation("TranslationConfig: quad_order must be at least 16");
  if (r_max < 1) fail_validation("TranslationConfig: r_max must be at least 1");
}

KernelValue kernel_B(double y, double x, double z) {
  return kernel(y, std::sqrt(std::max(0.0, 1.0 - y * y)), x, z);
}

double translate_t(const FuncRep& f, double t, double x, const TranslationConfig& cfg) {
  cfg.validate();
  if (!(std::abs(t) < kPi)) fail_validation("translate: |t| must be below pi");
  return with_endpoint_rule(x, [&](double xx) { return translate_interior_t(f, t, xx, cfg); });
}

double translate_y(const FuncRep& f, double y, double x, const TranslationConfig& cfg) {
  cfg.validate();
  if (!(y > -1.0 && y <= 1.0)) fail_validation("translate: y must lie in (-1, 1]");
  return with_endpoint_rule(x, [&](double xx) { return translate_interior_y(f, y, xx, cfg); });
}

double translate(const FuncRep& f, double t_or_y, double x, const TranslationConfig& cfg) {
  return cfg.form == TranslationForm::TForm ? translate_t(f, t_or_y, x, cfg) : translate_y(f, t_or_y, x, cfg);
}

void DifferenceRequest::validate() const {
  if (t.empty()) fail_validation("DifferenceRequest: r must be at least 1");
  for (double tj : t) {
    if (!(std::abs(tj) < kPi)) fail_validation("DifferenceRequest: every |t_j| must be below pi");
  }
}

FuncRep difference_function(const FuncRep& f, const DifferenceRequest& req, const TranslationConfig& cfg) {
  req.validate();
  cfg.validate();
  if (req.r() > cfg.r_max) {
    fail_validation("difference_r: r = " + std::to_string(req.r()) + " exceeds the cost guard r_max = " +
                    std::to_string(cfg.r_max));
  }
  TranslationConfig tcfg = cfg;
  tcfg.form = TranslationForm::TForm;
  FuncRep g = f;
  for (double tj : req.t) {
    g = FuncRep::callable([g, tj, tcfg](double x) { return translate_t(g, tj, x, tcfg) - g(x); }, "difference");
  }
  return g;
}

double difference_r(const FuncRep& f, const DifferenceRequest& req, double x, const TranslationConfig& cfg) {
  return difference_function(f, req, cfg)(x);
}

FuncRep translate_series(const FuncRep& f, double t, int degree, const TranslationConfig& cfg) {
  std::vector<double> x = cheb::interior_points(degree), v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = translate_t(f, t, x[i], cfg);
  return FuncRep::cheb(cheb::interp_interior(v));
}

double y_multiplier(int n, double y) { return eval_R(n, 0.0, 4.0, y); }

FuncRep translate_spectral(const FuncRep& f, double t) {
  if (f.kind() != FuncRep::Kind::Jacobi || f.nu() != 2.0 || f.mu() != 2.0) {
    fail_validation("translate_spectral: expects a (2,2) Jacobi series");
  }
  std::vector<double> b = f.coefficients();
  std::vector<double> q = eval_R_all(static_cast<int>(b.size()) - 1, 0.0, 4.0, std::cos(t));
  for (std::size_t n = 0; n < b.size(); ++n) b[n] *= q[n];
  return FuncRep::jacobi(std::move(b));
}

FuncRep difference_spectral(const FuncRep& f, const std::vector<double>& t) {
  if (f.kind() != FuncRep::Kind::Jacobi || f.nu() != 2.0 || f.mu() != 2.0) {
    fail_validation("difference_spectral: expects a (2,2) Jacobi series");
  }
  std::vector<double> b = f.coefficients();
  for (double tj : t) {
    std::vector<double> q = eval_R_all(static_cast<int>(b.size()) - 1, 0.0, 4.0, std::cos(tj));
    for (std::size_t n = 0; n < b.size(); ++n) b[n] *= q[n] - 1.0;
  }
  return FuncRep::jacobi(std::move(b));
}

double operator_norm_probe(double t, const WeightedSpace& space, const std::vector<FuncRep>& trials,
                           const ProbeOptions& opt) {
  space.require(Regime::TranslationBound);
  if (trials.empty()) fail_validation("operator_norm_probe: empty trial set");
  NormGrid grid = make_norm_grid(space, opt.resolution);
  double worst = 0.0;
  for (const FuncRep& f : trials) {
    std::vector<double> fv(grid.size()), tv(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (space.p_inf() && grid.weight[i] == 0.0) {
        fv[i] = tv[i] = 0.0;
        continue;
      }
      fv[i] = f(grid.x[i]);
      tv[i] = translate_t(f, t, grid.x[i], opt.translation);
    }
    double nf = grid.norm(fv);
    if (nf == 0.0) continue;
    worst = std::max(worst, grid.norm(tv) / nf);
  }
  return worst;
}

}  // namespace smoothlab
