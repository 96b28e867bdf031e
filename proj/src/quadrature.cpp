#include "smoothlab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "smoothlab/errors.hpp"

namespace smoothlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct JacobiRecurrence {
  std::vector<double> alpha;  // diagonal, k = 0..m-1
  std::vector<double> beta;   // beta[k] for k = 1..m (beta[0] unused)
};

JacobiRecurrence jacobi_recurrence(double a, double b, int m) {
  JacobiRecurrence rc;
  rc.alpha.resize(m);
  rc.beta.assign(m + 1, 0.0);
  const double s = a + b;
  for (int k = 0; k < m; ++k) {
    if (k == 0) {
      rc.alpha[k] = (b - a) / (s + 2.0);
    } else {
      double d = 2.0 * k + s;
      rc.alpha[k] = (b * b - a * a) / (d * (d + 2.0));
    }
  }
  for (int k = 1; k <= m; ++k) {
    if (k == 1) {
      rc.beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    } else {
      double d = 2.0 * k + s;
      rc.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + s) / (d * d * (d + 1.0) * (d - 1.0));
    }
  }
  return rc;
}

QuadratureRule gauss_jacobi(double a, double b, int m) {
  if (!(a > -1.0) || !(b > -1.0)) fail_validation("gauss_jacobi requires a, b > -1");
  JacobiRecurrence rc = jacobi_recurrence(a, b, m);
  const double mu0 = jacobi_weight_mass(a, b);

  Eigen::VectorXd diag(m), sub(std::max(m - 1, 1));
  for (int k = 0; k < m; ++k) diag[k] = rc.alpha[k];
  for (int k = 1; k < m; ++k) sub[k - 1] = std::sqrt(rc.beta[k]);

  std::vector<double> x(m);
  if (m == 1) {
    x[0] = rc.alpha[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(m - 1), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) fail_numerical("gauss_jacobi: tridiagonal eigensolver failed");
    for (int i = 0; i < m; ++i) x[i] = es.eigenvalues()[i];
  }

  QuadratureRule rule;
  rule.kind = RuleKind::GaussJacobi;
  rule.a = a;
  rule.b = b;
  rule.order = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  for (int i = 0; i < m; ++i) {
    double xi = x[i];
    // Newton polish on the orthonormal p_m, then Christoffel weights
    for (int it = 0; it < 2; ++it) {
      double p0 = 1.0 / std::sqrt(mu0), p1 = 0.0, d0 = 0.0, d1 = 0.0;
      for (int k = 0; k < m; ++k) {
        double sb = std::sqrt(rc.beta[k + 1]);
        double pk = ((xi - rc.alpha[k]) * p0 - (k > 0 ? std::sqrt(rc.beta[k]) : 0.0) * p1) / sb;
        double dk = (p0 + (xi - rc.alpha[k]) * d0 - (k > 0 ? std::sqrt(rc.beta[k]) : 0.0) * d1) / sb;
        p1 = p0;
        p0 = pk;
        d1 = d0;
        d0 = dk;
      }
      if (d0 == 0.0 || !std::isfinite(p0 / d0)) break;
      double step = p0 / d0;
      if (std::abs(step) > 1e-6) break;
      xi -= step;
    }
    double p_prev = 0.0, p = 1.0 / std::sqrt(mu0), sum = p * p;
    for (int k = 0; k + 1 < m; ++k) {
      double pk = ((xi - rc.alpha[k]) * p - (k > 0 ? std::sqrt(rc.beta[k]) : 0.0) * p_prev) /
                  std::sqrt(rc.beta[k + 1]);
      p_prev = p;
      p = pk;
      sum += p * p;
    }
    rule.nodes[i] = xi;
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

}  // namespace

std::string to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::GaussLegendre: return "gauss_legendre";
    case RuleKind::GaussJacobi: return "gauss_jacobi";
    case RuleKind::GaussChebyshev: return "gauss_chebyshev";
    case RuleKind::TrapezoidPeriodic: return "trapezoid_periodic";
  }
  return "unknown";
}

double jacobi_weight_mass(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

QuadratureRule gauss_rule(RuleKind kind, int order, double a, double b) {
  if (order <= 0) fail_validation("gauss_rule: order must be positive");
  QuadratureRule rule;
  switch (kind) {
    case RuleKind::GaussLegendre:
      rule = gauss_jacobi(0.0, 0.0, order);
      rule.kind = RuleKind::GaussLegendre;
      rule.a = rule.b = 0.0;
      return rule;
    case RuleKind::GaussJacobi:
      return gauss_jacobi(a, b, order);
    case RuleKind::GaussChebyshev:
      rule.kind = kind;
      rule.order = order;
      rule.nodes.resize(order);
      rule.weights.assign(order, kPi / order);
      for (int k = 0; k < order; ++k) rule.nodes[k] = -std::cos((2.0 * k + 1.0) * kPi / (2.0 * order));
      return rule;
    case RuleKind::TrapezoidPeriodic:
      rule.kind = kind;
      rule.order = order;
      rule.nodes.resize(order);
      rule.weights.assign(order, 2.0 * kPi / order);
      for (int k = 0; k < order; ++k) rule.nodes[k] = 2.0 * kPi * k / order;
      return rule;
  }
  fail_validation("gauss_rule: unsupported kind");
}

std::shared_ptr<const QuadratureRule> cached_rule(RuleKind kind, int order, double a, double b) {
  using Key = std::tuple<int, int, double, double>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
  if (kind != RuleKind::GaussJacobi) a = b = 0.0;
  Key key{static_cast<int>(kind), order, a, b};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_rule(kind, order, a, b));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, rule).first->second;
}

QuadratureRule legendre_on(double lo, double hi, int order) {
  auto base = cached_rule(RuleKind::GaussLegendre, order);
  QuadratureRule rule = *base;
  double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = c + h * base->nodes[i];
    rule.weights[i] = h * base->weights[i];
  }
  return rule;
}

}  // namespace smoothlab
