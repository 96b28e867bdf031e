#include "smoothlab/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/quadrature.hpp"

namespace smoothlab {

void eval_R_all(int n_max, double a, double b, double x, double* out) {
  if (n_max < 0) return;
  out[0] = 1.0;
  if (n_max == 0) return;
  out[1] = 1.0 + (a + b + 2.0) * (x - 1.0) / (2.0 * (a + 1.0));
  for (int n = 1; n < n_max; ++n) {
    const double s = 2.0 * n + a + b;
    const double den = 2.0 * (n + 1) * (n + a + b + 1.0) * s;
    const double lin = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b) / den;
    const double back = 2.0 * (n + a) * (n + b) * (s + 2.0) / den;
    // P_n(1) ratios: P_n(1)/P_{n+1}(1) and P_{n-1}(1)/P_{n+1}(1)
    const double r1 = (n + 1.0) / (n + 1.0 + a);
    const double r2 = n * (n + 1.0) / ((n + a) * (n + 1.0 + a));
    out[n + 1] = lin * r1 * out[n] - back * r2 * out[n - 1];
  }
}

std::vector<double> eval_R_all(int n_max, double nu, double mu, double x) {
  std::vector<double> v(std::max(n_max + 1, 0));
  eval_R_all(n_max, nu, mu, x, v.data());
  return v;
}

double eval_R(int n, double nu, double mu, double x) {
  if (n < 0) fail_validation("eval_R: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 1.0 + (nu + mu + 2.0) * (x - 1.0) / (2.0 * (nu + 1.0));
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + nu + mu;
    const double den = 2.0 * (k + 1) * (k + nu + mu + 1.0) * s;
    const double lin = (s + 1.0) * ((s + 2.0) * s * x + nu * nu - mu * mu) / den;
    const double back = 2.0 * (k + nu) * (k + mu) * (s + 2.0) / den;
    const double r1 = (k + 1.0) / (k + 1.0 + nu);
    const double r2 = k * (k + 1.0) / ((k + nu) * (k + 1.0 + nu));
    double next = lin * r1 * cur - back * r2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_series_eval(const std::vector<double>& b, double nu, double mu, double x) {
  if (b.empty()) return 0.0;
  double s = b[0];
  if (b.size() == 1) return s;
  double prev = 1.0, cur = 1.0 + (nu + mu + 2.0) * (x - 1.0) / (2.0 * (nu + 1.0));
  s += b[1] * cur;
  for (std::size_t kk = 1; kk + 1 < b.size(); ++kk) {
    const double k = static_cast<double>(kk);
    const double sk = 2.0 * k + nu + mu;
    const double den = 2.0 * (k + 1) * (k + nu + mu + 1.0) * sk;
    const double lin = (sk + 1.0) * ((sk + 2.0) * sk * x + nu * nu - mu * mu) / den;
    const double back = 2.0 * (k + nu) * (k + mu) * (sk + 2.0) / den;
    const double r1 = (k + 1.0) / (k + 1.0 + nu);
    const double r2 = k * (k + 1.0) / ((k + nu) * (k + 1.0 + nu));
    double next = lin * r1 * cur - back * r2 * prev;
    prev = cur;
    cur = next;
    s += b[kk + 1] * cur;
  }
  return s;
}

double jacobi_value_at_one(int n, double nu) {
  return std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0) - std::lgamma(nu + 1.0));
}

double jacobi_eigenvalue(int n, double nu, double mu) { return -n * (n + nu + mu + 1.0); }

JacobiBasis::JacobiBasis(double nu, double mu, int max_degree)
    : nu_(nu), mu_(mu), max_degree_(max_degree) {
  if (!(nu > -1.0) || !(mu > -1.0)) fail_validation("JacobiBasis: nu, mu must exceed -1");
  if (max_degree < 0) fail_validation("JacobiBasis: negative max_degree");
  auto rule = cached_rule(RuleKind::GaussJacobi, max_degree + 2, nu, mu);
  norm_sq_.assign(max_degree + 1, 0.0);
  std::vector<double> r(max_degree + 1);
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    eval_R_all(max_degree, nu, mu, rule->nodes[i], r.data());
    for (int n = 0; n <= max_degree; ++n) norm_sq_[n] += rule->weights[i] * r[n] * r[n];
  }
}

std::vector<double> JacobiBasis::inner_products(const FuncRep& f, int quad_order) const {
  auto rule = cached_rule(RuleKind::GaussJacobi, quad_order, nu_, mu_);
  std::vector<double> a(max_degree_ + 1, 0.0), r(max_degree_ + 1);
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    double fx = f(rule->nodes[i]);
    if (!std::isfinite(fx)) fail_numerical("Fourier-Jacobi analysis: f not finite at a quadrature node");
    double w = rule->weights[i] * fx;
    eval_R_all(max_degree_, nu_, mu_, rule->nodes[i], r.data());
    for (int n = 0; n <= max_degree_; ++n) a[n] += w * r[n];
  }
  return a;
}

FuncRep JacobiBasis::analyze(const FuncRep& f, int quad_order) const {
  std::vector<double> a = inner_products(f, quad_order);
  for (int n = 0; n <= max_degree_; ++n) a[n] /= norm_sq_[n];
  return FuncRep::jacobi(std::move(a), nu_, mu_);
}

FuncRep JacobiBasis::synthesize(const std::vector<double>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > max_degree_ + 1) fail_validation("synthesize: too many coefficients");
  return FuncRep::jacobi(coeffs, nu_, mu_);
}

std::vector<double> fourier_jacobi(const FuncRep& f, int N, const FourierOptions& opt) {
  if (N < 0) fail_validation("fourier_jacobi: N must be nonnegative");
  int m = opt.quad_order > 0 ? opt.quad_order : std::max(64, N + 8);
  if (m < N + 8) fail_validation("fourier_jacobi: quadrature order must be at least N + 8");
  JacobiBasis basis(2.0, 2.0, N);
  std::vector<double> a = basis.inner_products(f, m);
  if (opt.self_check) {
    std::vector<double> a2 = basis.inner_products(f, 2 * m);
    double scale = 1.0, diff = 0.0;
    for (int n = 0; n <= N; ++n) {
      scale = std::max(scale, std::abs(a2[n]));
      diff = std::max(diff, std::abs(a[n] - a2[n]));
    }
    if (diff > opt.tolerance * scale) {
      std::ostringstream os;
      os << "fourier_jacobi: order-doubling discrepancy " << diff << " at order " << m
         << " exceeds " << opt.tolerance << "; f needs a higher quadrature order";
      fail_numerical(os.str());
    }
    a = a2;
  }
  return a;
}

FuncRep jacobi_expand(const FuncRep& f, int N, double nu, double mu, int quad_order) {
  if (N < 0) fail_validation("jacobi_expand: N must be nonnegative");
  if (f.kind() == FuncRep::Kind::Jacobi && f.nu() == nu && f.mu() == mu) {
    std::vector<double> b = f.coefficients();
    b.resize(N + 1, 0.0);
    return FuncRep::jacobi(std::move(b), nu, mu);
  }
  int m = quad_order;
  if (m <= 0) m = f.is_series() ? std::max(N, f.degree()) + 2 : std::max(64, 2 * N + 2);
  JacobiBasis basis(nu, mu, N);
  return basis.analyze(f, m);
}

std::vector<double> apply_D_cheb(const std::vector<double>& c, double nu, double mu) {
  const std::size_t n = c.size();
  std::vector<double> d1 = cheb::derivative(c);
  std::vector<double> d2 = cheb::derivative(d1);
  // (1 - x^2) c'' + (mu - nu) c' - (nu + mu + 2) x c'
  std::vector<double> out = cheb::add(d2, cheb::scale(cheb::mul_x(cheb::mul_x(d2)), -1.0));
  out = cheb::add(out, cheb::scale(d1, mu - nu));
  out = cheb::add(out, cheb::scale(cheb::mul_x(d1), -(nu + mu + 2.0)));
  out.resize(n, 0.0);
  return out;
}

FuncRep apply_D(const FuncRep& f, double nu, double mu, int r, int callable_degree) {
  if (r < 1) fail_validation("apply_D: power r must be at least 1");
  if (f.kind() == FuncRep::Kind::Jacobi && f.nu() == nu && f.mu() == mu) {
    std::vector<double> b = f.coefficients();
    for (std::size_t n = 0; n < b.size(); ++n) {
      b[n] *= std::pow(jacobi_eigenvalue(static_cast<int>(n), nu, mu), r);
    }
    return FuncRep::jacobi(std::move(b), nu, mu);
  }
  std::vector<double> c = f.cheb_coeffs(callable_degree);
  for (int k = 0; k < r; ++k) c = apply_D_cheb(c, nu, mu);
  return FuncRep::cheb(std::move(c));
}

}  // namespace smoothlab
