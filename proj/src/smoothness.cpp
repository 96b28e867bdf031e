#include "smoothlab/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"
#include "smoothlab/quadrature.hpp"

namespace smoothlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kC0 = 16.0 / 15.0;
constexpr double kIntegralEdge = 1.0 - 1e-8;

const std::vector<double>& weight_cheb() {
  static const std::vector<double> w = cheb::from_monomial({1.0, 0.0, -2.0, 0.0, 1.0});
  return w;
}

bool is_jacobi22(const FuncRep& f) {
  return f.kind() == FuncRep::Kind::Jacobi && f.nu() == 2.0 && f.mu() == 2.0;
}

// int_{-1}^{1} g (1 - z^2)^2 dz / c_0 for Chebyshev coefficients g.
double weighted_mean(const std::vector<double>& g) {
  std::vector<double> G = cheb::antiderivative(cheb::mul(g, weight_cheb()));
  return (cheb::eval(G, 1.0) - cheb::eval(G, -1.0)) / kC0;
}

struct HIntegralStep {
  std::vector<double> G;  // antiderivative of (g - mean)(1 - z^2)^2
  double G_lo = 0.0;
  double G_hi = 0.0;

  explicit HIntegralStep(const std::vector<double>& g) {
    std::vector<double> centered = g;
    centered[0] -= weighted_mean(g);
    G = cheb::antiderivative(cheb::mul(centered, weight_cheb()));
    G_lo = cheb::eval(G, -1.0);
    G_hi = cheb::eval(G, 1.0);
  }

  double inner(double y) const { return (y >= 0.0 ? G_hi : G_lo) - cheb::eval(G, y); }

  double at(double x) const {
    if (std::abs(x) > kIntegralEdge) fail_validation("H integral form: |x| must not exceed 1 - 1e-8");
    if (x == 0.0) return 0.0;
    auto rule = cached_rule(RuleKind::GaussLegendre, 64);
    const double half = 0.5 * x;
    double s = 0.0;
    for (std::size_t k = 0; k < rule->nodes.size(); ++k) {
      const double y = half * (rule->nodes[k] + 1.0);
      const double w = 1.0 - y * y;
      s += rule->weights[k] * inner(y) / (w * w * w);
    }
    return -half * s;
  }
};

std::vector<double> H_integral_cheb(const std::vector<double>& g) {
  HIntegralStep step(g);
  const int d = std::max(static_cast<int>(g.size()) - 1, 0);
  std::vector<double> x = cheb::interior_points(d), v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = step.at(x[i]);
  return cheb::interp_interior(v);
}

std::vector<double> H_multiplier_coeffs(std::vector<double> b) {
  double at0 = 0.0;
  std::vector<double> r0 = eval_R_all(static_cast<int>(b.size()) - 1, 2.0, 2.0, 0.0);
  for (std::size_t n = 1; n < b.size(); ++n) {
    b[n] = -b[n] / (static_cast<double>(n) * (n + 5.0));
    at0 += b[n] * r0[n];
  }
  b[0] = -at0;
  return b;
}

}  // namespace

double SLWeight::A(double t) {
  const double c = std::cos(0.5 * t);
  const double c2 = c * c, c4 = c2 * c2;
  return std::sin(0.5 * t) * c4 * c4 * c;
}

double kappa(double delta, int quad_order) {
  if (!(delta > 0.0 && delta < kPi)) fail_validation("kappa: delta must lie in (0, pi)");
  auto rule = cached_rule(RuleKind::GaussLegendre, quad_order);
  double outer = 0.0;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    const double v = 0.5 * delta * (rule->nodes[i] + 1.0);
    double inner = 0.0;
    for (std::size_t j = 0; j < rule->nodes.size(); ++j) {
      inner += rule->weights[j] * SLWeight::A(0.5 * v * (rule->nodes[j] + 1.0));
    }
    inner *= 0.5 * v;
    outer += rule->weights[i] * inner / SLWeight::A(v);
  }
  return 0.5 * delta * outer;
}

double h_multiplier(int n, double delta) {
  if (n < 0) fail_validation("h_multiplier: negative degree");
  if (n == 0 || delta == 0.0) return 1.0;
  return (1.0 - eval_R(n, 0.0, 4.0, std::cos(delta))) / (n * (n + 5.0) * kappa(delta));
}

std::vector<double> h_multipliers(int n_max, double delta) {
  std::vector<double> h(n_max + 1, 1.0);
  if (delta == 0.0) return h;
  const double k = kappa(delta);
  std::vector<double> q = eval_R_all(n_max, 0.0, 4.0, std::cos(delta));
  for (int n = 1; n <= n_max; ++n) h[n] = (1.0 - q[n]) / (n * (n + 5.0) * k);
  return h;
}

std::string to_string(HMethod m) { return m == HMethod::Integral ? "integral" : "multiplier"; }

HMethod hmethod_from_name(const std::string& name) {
  if (name == "integral") return HMethod::Integral;
  if (name == "multiplier") return HMethod::Multiplier;
  fail_validation("unknown H method '" + name + "' (expected integral or multiplier)");
}

double c_coefficient(const FuncRep& f, int k, int degree) {
  if (k < 0) fail_validation("c_coefficient: k must be nonnegative");
  if (k == 0) return kC0;
  FuncRep g = k == 1 ? f : H_apply(f, k - 1, HOptions{HMethod::Multiplier, degree});
  return kC0 * weighted_mean(g.cheb_coeffs(degree));
}

FuncRep H_apply(const FuncRep& f, int r, const HOptions& opt) {
  if (r < 1) fail_validation("H_apply: r must be at least 1");
  if (opt.method == HMethod::Multiplier) {
    FuncRep s = is_jacobi22(f) ? f : jacobi_expand(f, f.is_series() ? std::max(f.degree(), 0) : opt.degree);
    std::vector<double> b = s.coefficients();
    for (int i = 0; i < r; ++i) b = H_multiplier_coeffs(std::move(b));
    return FuncRep::jacobi(std::move(b));
  }
  std::vector<double> c = f.cheb_coeffs(opt.degree);
  for (int i = 0; i < r; ++i) c = H_integral_cheb(c);
  return FuncRep::cheb(std::move(c));
}

double H_integral_at(const FuncRep& f, double x, int degree) {
  return HIntegralStep(f.cheb_coeffs(degree)).at(x);
}

double H_delta_integral_at(const FuncRep& f, double delta, double x, const HOptions& opt) {
  if (!(delta > 0.0 && delta < kPi)) fail_validation("H_delta: delta must lie in (0, pi)");
  auto rule = cached_rule(RuleKind::GaussLegendre, opt.quad_order);
  double outer = 0.0;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    const double v = 0.5 * delta * (rule->nodes[i] + 1.0);
    double inner = 0.0;
    for (std::size_t j = 0; j < rule->nodes.size(); ++j) {
      const double u = 0.5 * v * (rule->nodes[j] + 1.0);
      inner += rule->weights[j] * translate_t(f, u, x, opt.translation) * SLWeight::A(u);
    }
    inner *= 0.5 * v;
    outer += rule->weights[i] * inner / SLWeight::A(v);
  }
  return 0.5 * delta * outer / kappa(delta);
}

FuncRep H_delta_apply(const FuncRep& f, double delta, int r, const HOptions& opt) {
  if (r < 1) fail_validation("H_delta_apply: r must be at least 1");
  if (!(delta > 0.0 && delta < kPi)) fail_validation("H_delta: delta must lie in (0, pi)");
  if (opt.method == HMethod::Multiplier) {
    FuncRep s = is_jacobi22(f) ? f : jacobi_expand(f, f.is_series() ? std::max(f.degree(), 0) : opt.degree);
    std::vector<double> b = s.coefficients();
    std::vector<double> h = h_multipliers(static_cast<int>(b.size()) - 1, delta);
    for (std::size_t n = 0; n < b.size(); ++n) b[n] *= std::pow(h[n], r);
    return FuncRep::jacobi(std::move(b));
  }
  FuncRep g = f.is_series() ? f : f.as_cheb(opt.degree);
  for (int i = 0; i < r; ++i) {
    const int d = std::max(g.degree(), 0);
    std::vector<double> x = cheb::interior_points(d), v(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) v[k] = H_delta_integral_at(g, delta, x[k], opt);
    g = FuncRep::cheb(cheb::interp_interior(v));
  }
  return g;
}

double H_delta_method_gap(const FuncRep& f, double delta, int r, int probes, const HOptions& opt) {
  if (probes < 1) fail_validation("H_delta_method_gap: probes must be positive");
  HOptions a = opt, b = opt;
  a.method = HMethod::Integral;
  b.method = HMethod::Multiplier;
  FuncRep hi = H_delta_apply(f, delta, r, a);
  FuncRep hm = H_delta_apply(f, delta, r, b);
  double gap = 0.0;
  for (int k = 0; k < probes; ++k) {
    const double x = -0.95 + 1.9 * k / std::max(probes - 1, 1);
    gap = std::max(gap, std::abs(hi(x) - hm(x)));
  }
  return gap;
}

ModulusEngine::ModulusEngine(const FuncRep& f, const WeightedSpace& space, const ModulusOptions& opt) : opt_(opt) {
  space.require(Regime::DirectInverse);
  if (opt.t_grid < 1) fail_validation("modulus: t_grid must be positive");
  if (opt.analysis_degree < 1) fail_validation("modulus: analysis_degree must be positive");
  series_ = spectral_series(f, opt.analysis_degree);
  const int N = std::max(series_.degree(), 0);
  const int res = space.p_inf() ? opt.x_resolution : std::max(opt.x_resolution, N + 1);
  norm_ = std::make_shared<SpectralNorm>(make_norm_grid(space, res), N);
}

double ModulusEngine::f_norm() const { return norm_->norm(series_.coefficients()); }

ModulusResult ModulusEngine::compute(int r, double delta) const {
  if (r < 1 || r > 3) fail_validation("modulus: r must be 1, 2 or 3");
  if (!(delta >= 0.0 && delta < kPi)) fail_validation("modulus: delta must lie in [0, pi)");
  ModulusResult res;
  res.r = r;
  res.delta = delta;
  res.degree = norm_->degree();
  res.grid_size = opt_.t_grid;
  res.argmax_t.assign(r, 0.0);
  if (delta == 0.0) return res;

  const int N = norm_->degree();
  const int steps = opt_.refine ? 2 * opt_.t_grid : opt_.t_grid;
  const int stride = opt_.refine ? 2 : 1;
  // mult[j][n] = Q_n(cos t_j) - 1
  std::vector<std::vector<double>> mult(steps + 1);
  for (int j = 1; j <= steps; ++j) {
    mult[j] = eval_R_all(N, 0.0, 4.0, std::cos(delta * j / steps));
    for (double& m : mult[j]) m -= 1.0;
  }
  const std::vector<double>& b = series_.coefficients();

  // Nondecreasing index tuples; the difference is symmetric in its steps.
  std::vector<std::vector<int>> tuples;
  std::vector<int> idx(r, 1);
  while (true) {
    tuples.push_back(idx);
    int k = r - 1;
    while (k >= 0 && idx[k] == steps) --k;
    if (k < 0) break;
    ++idx[k];
    for (int m = k + 1; m < r; ++m) idx[m] = idx[k];
  }

  constexpr std::size_t kBatch = 128;
  double best = 0.0, best_coarse = 0.0;
  for (std::size_t start = 0; start < tuples.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, tuples.size() - start);
    Eigen::MatrixXd C(N + 1, count);
    for (std::size_t c = 0; c < count; ++c) {
      const std::vector<int>& tp = tuples[start + c];
      for (int n = 0; n <= N; ++n) {
        double v = n < static_cast<int>(b.size()) ? b[n] : 0.0;
        for (int j : tp) v *= mult[j][n];
        C(n, c) = v;
      }
    }
    std::vector<double> nv = norm_->norms(C);
    for (std::size_t c = 0; c < count; ++c) {
      const std::vector<int>& tp = tuples[start + c];
      best = std::max(best, nv[c]);
      bool coarse = std::all_of(tp.begin(), tp.end(), [&](int j) { return j % stride == 0; });
      if (coarse && nv[c] > best_coarse) {
        best_coarse = nv[c];
        for (int k = 0; k < r; ++k) res.argmax_t[k] = delta * tp[k] / steps;
      }
    }
  }
  res.value = best_coarse;
  res.refined_value = best;
  res.converged = best - best_coarse <= opt_.refine_tolerance * best;
  if (!res.converged && opt_.strict) {
    fail_numerical("modulus: refining the t-grid changed the value by more than " +
                   std::to_string(100.0 * opt_.refine_tolerance) + "%; f may be too oscillatory for this grid");
  }
  return res;
}

ModulusResult modulus(const FuncRep& f, int r, double delta, const WeightedSpace& space, const ModulusOptions& opt) {
  if (r < 1 || r > 3) fail_validation("modulus: r must be 1, 2 or 3");
  if (!(delta >= 0.0 && delta < kPi)) fail_validation("modulus: delta must lie in [0, pi)");
  return ModulusEngine(f, space, opt).compute(r, delta);
}

}  // namespace smoothlab
