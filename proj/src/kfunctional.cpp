#include "smoothlab/kfunctional.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <functional>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"
#include "smoothlab/lp.hpp"
#include "smoothlab/norms.hpp"

namespace smoothlab {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Discretized objective ||f - V c|| + s ||G c|| on the active grid rows.
struct Problem {
  int S = 0;
  double s = 0.0;
  double p = 2.0;
  bool inf = false;
  MatrixXd V, G;
  VectorXd f, w;  // w: quadrature weights (p < inf) or weight values (p = inf)

  double norm(const VectorXd& v) const {
    if (inf) return (w.array() * v.array().abs()).maxCoeff();
    if (p == 2.0) return std::sqrt((w.array() * v.array().square()).sum());
    return std::pow((w.array() * v.array().abs().pow(p)).sum(), 1.0 / p);
  }
  double fit(const VectorXd& c) const { return norm(f - V * c); }
  double smooth(const VectorXd& c) const { return s == 0.0 ? 0.0 : s * norm(G * c); }
  double J(const VectorXd& c) const { return fit(c) + smooth(c); }
};

Problem build(const FuncRep& f, int r, double delta, const WeightedSpace& space, int S, int resolution) {
  Problem P;
  P.S = S;
  P.s = std::pow(delta, 2 * r);
  P.p = space.p;
  P.inf = space.p_inf();
  NormGrid grid = make_norm_grid(space, resolution);
  std::vector<int> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!P.inf || grid.weight[i] > 0.0) rows.push_back(static_cast<int>(i));
  }
  const int M = static_cast<int>(rows.size());
  P.V.resize(M, S + 1);
  P.f.resize(M);
  P.w.resize(M);
  for (int i = 0; i < M; ++i) {
    const double x = grid.x[rows[i]];
    P.w(i) = P.inf ? grid.weight[rows[i]] : grid.quad[rows[i]];
    P.f(i) = f(x);
    if (!std::isfinite(P.f(i))) fail_numerical("k_functional: f is not finite at x = " + std::to_string(x));
    double t0 = 1.0, t1 = x;
    for (int k = 0; k <= S; ++k) {
      P.V(i, k) = k == 0 ? 1.0 : (k == 1 ? x : 0.0);
      if (k >= 2) {
        double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
        P.V(i, k) = t2;
      }
    }
  }
  // D^r on Chebyshev coefficients.
  MatrixXd Dm = MatrixXd::Zero(S + 1, S + 1);
  for (int k = 0; k <= S; ++k) {
    std::vector<double> e(S + 1, 0.0);
    e[k] = 1.0;
    std::vector<double> d = apply_D_cheb(e, 2.0, 2.0);
    for (int j = 0; j <= S && j < static_cast<int>(d.size()); ++j) Dm(j, k) = d[j];
  }
  MatrixXd Dr = MatrixXd::Identity(S + 1, S + 1);
  for (int i = 0; i < r; ++i) Dr = Dm * Dr;
  P.G = P.V * Dr;
  return P;
}

// argmin sum Wf (f - V c)^2 + mu sum Wd (G c)^2.
VectorXd tikhonov(const Problem& P, const VectorXd& Wf, const VectorXd& Wd, double mu) {
  const int M = P.V.rows(), n = P.S + 1;
  const bool reg = mu > 0.0;
  MatrixXd A(reg ? 2 * M : M, n);
  VectorXd rhs = VectorXd::Zero(A.rows());
  VectorXd sf = Wf.cwiseSqrt();
  A.topRows(M) = sf.asDiagonal() * P.V;
  rhs.head(M) = sf.cwiseProduct(P.f);
  if (reg) A.bottomRows(M) = (std::sqrt(mu) * Wd.cwiseSqrt()).asDiagonal() * P.G;
  return A.colPivHouseholderQr().solve(rhs);
}

VectorXd weighted_constant(const Problem& P, const VectorXd& Wf) {
  VectorXd c = VectorXd::Zero(P.S + 1);
  c(0) = Wf.dot(P.f) / Wf.sum();
  return c;
}

// Best point of the Tikhonov path, measured by the true objective.
VectorXd path_search(const Problem& P, const VectorXd& Wf, const VectorXd& Wd, int& iterations) {
  VectorXd best = weighted_constant(P, Wf);
  double bestJ = P.J(best);
  auto consider = [&](const VectorXd& c) {
    double j = P.J(c);
    ++iterations;
    if (j < bestJ) {
      bestJ = j;
      best = c;
    }
    return j;
  };
  consider(tikhonov(P, Wf, Wd, 0.0));
  if (P.s == 0.0) return best;

  const double center = std::log10(P.s);
  const double lo = center - 30.0, step = 0.5;
  const int count = 81;
  std::vector<double> Js(count);
  int arg = 0;
  for (int k = 0; k < count; ++k) {
    Js[k] = consider(tikhonov(P, Wf, Wd, std::pow(10.0, lo + step * k)));
    if (Js[k] < Js[arg]) arg = k;
  }
  // Golden section on log10(mu) around the best scan point.
  double a = lo + step * std::max(arg - 1, 0), b = lo + step * std::min(arg + 1, count - 1);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = consider(tikhonov(P, Wf, Wd, std::pow(10.0, x1)));
  double f2 = consider(tikhonov(P, Wf, Wd, std::pow(10.0, x2)));
  for (int it = 0; it < 40 && b - a > 1e-6; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = consider(tikhonov(P, Wf, Wd, std::pow(10.0, x1)));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = consider(tikhonov(P, Wf, Wd, std::pow(10.0, x2)));
    }
  }
  return best;
}

// p = inf: solve the dual LP; the primal coefficients are minus its duals.
VectorXd solve_inf(const Problem& P, int& iterations, double& lower) {
  const int M = P.V.rows(), n = P.S + 1;
  MatrixXd A = MatrixXd::Zero(n + 2, 4 * M);
  VectorXd b = VectorXd::Zero(n + 2), cost = VectorXd::Zero(4 * M);
  for (int i = 0; i < M; ++i) {
    for (int k = 0; k < n; ++k) {
      const double a = P.w(i) * P.V(i, k), g = P.s * P.w(i) * P.G(i, k);
      A(k, i) = a;
      A(k, M + i) = -a;
      A(k, 2 * M + i) = g;
      A(k, 3 * M + i) = -g;
    }
    A(n, i) = A(n, M + i) = 1.0;
    A(n + 1, 2 * M + i) = A(n + 1, 3 * M + i) = 1.0;
    cost(i) = -P.w(i) * P.f(i);
    cost(M + i) = P.w(i) * P.f(i);
  }
  b(n) = b(n + 1) = 1.0;
  VectorXd scale = VectorXd::Ones(n + 2);
  for (int k = 0; k < n; ++k) {
    double m = A.row(k).cwiseAbs().maxCoeff();
    if (m > 0.0) {
      scale(k) = m;
      A.row(k) /= m;
    }
  }
  LPResult lp = solve_lp(A, b, cost);
  iterations += lp.iterations;
  if (lp.status != LPStatus::Optimal) {
    fail_numerical("k_functional: linear program ended with status '" + to_string(lp.status) + "'");
  }
  lower = -lp.objective;
  VectorXd c(n);
  for (int k = 0; k < n; ++k) c(k) = -lp.dual(k) / scale(k);
  return c;
}

// 1 <= p < inf, p != 2: iteratively reweighted least squares on both terms.
VectorXd solve_irls(const Problem& P, const KFunctionalOptions& opt, int& iterations) {
  VectorXd c = path_search(P, P.w, P.w, iterations);
  double J = P.J(c);
  const double p = P.p;
  const double floor = std::max(P.f.cwiseAbs().maxCoeff(), 1e-12);
  for (double eps = 1e-2; eps >= 1e-10 * 0.999; eps *= 0.1) {
    for (int it = 0; it < opt.max_iterations; ++it) {
      ++iterations;
      VectorXd e = P.f - P.V * c, d = P.G * c;
      const double se = std::max(e.cwiseAbs().maxCoeff(), floor) * eps;
      const double sd = std::max(d.cwiseAbs().maxCoeff(), floor) * eps;
      VectorXd ae = (e.array().square() + se * se).sqrt();
      VectorXd ad = (d.array().square() + sd * sd).sqrt();
      const double ne = std::pow((P.w.array() * ae.array().pow(p)).sum(), 1.0 / p);
      const double nd = std::pow((P.w.array() * ad.array().pow(p)).sum(), 1.0 / p);
      VectorXd Wf = P.w.array() * ae.array().pow(p - 2.0) / std::pow(ne, p - 1.0);
      VectorXd Wd = P.s * P.w.array() * ad.array().pow(p - 2.0) / std::pow(nd, p - 1.0);
      VectorXd cand = P.s == 0.0 ? tikhonov(P, Wf, Wd, 0.0) : tikhonov(P, Wf, Wd, 1.0);
      // Backtracking on the true objective.
      double t = 1.0, Jn = P.J(cand);
      VectorXd dir = cand - c;
      while (Jn >= J && t > 1e-6) {
        t *= 0.5;
        Jn = P.J(c + t * dir);
      }
      if (Jn >= J) break;
      const double gain = J - Jn;
      c += t * dir;
      J = Jn;
      if (gain <= opt.tolerance * std::max(J, 1e-300)) break;
    }
  }
  return c;
}

KFunctionalResult solve(const FuncRep& f, int r, double delta, const WeightedSpace& space, int S,
                        const KFunctionalOptions& opt, double* f_scale = nullptr) {
  const int res = opt.resolution > 0 ? opt.resolution : (space.p_inf() ? 513 : 512);
  Problem P = build(f, r, delta, space, S, res);
  if (f_scale) *f_scale = P.norm(P.f);
  KFunctionalResult out;
  out.search_degree = S;
  VectorXd c;
  if (P.inf) {
    out.solver = "lp";
    c = solve_inf(P, out.iterations, out.lower_bound);
  } else if (P.p == 2.0) {
    out.solver = "tikhonov-path";
    c = path_search(P, P.w, P.w, out.iterations);
  } else {
    out.solver = "irls";
    c = solve_irls(P, opt, out.iterations);
  }
  out.fit_term = P.fit(c);
  out.smooth_term = P.smooth(c);
  out.value = out.fit_term + out.smooth_term;
  out.minimizer = FuncRep::cheb(std::vector<double>(c.data(), c.data() + c.size()));
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

KFunctionalResult k_functional(const FuncRep& f, int r, double delta, const WeightedSpace& space,
                               const KFunctionalOptions& opt) {
  if (r < 1) fail_validation("k_functional: r must be at least 1");
  if (!(delta >= 0.0) || !std::isfinite(delta)) fail_validation("k_functional: delta must be finite and >= 0");
  if (opt.search_degree < 4) fail_validation("k_functional: search_degree must be at least 4");
  double f_scale = 0.0;
  KFunctionalResult out = solve(f, r, delta, space, opt.search_degree, opt, &f_scale);
  if (opt.certify) {
    KFunctionalResult coarse = solve(f, r, delta, space, opt.search_degree / 2, opt);
    out.coarse_value = coarse.value;
    if (out.value > coarse.value * (1.0 + 1e-6) + 1e-12 * f_scale) {
      fail_numerical("k_functional: solver non-convergence (degree " + std::to_string(opt.search_degree) +
                     " gives " + fmt(out.value) + " > " + fmt(coarse.value) + " at degree " +
                     std::to_string(opt.search_degree / 2) + ")");
    }
  }
  return out;
}

}  // namespace smoothlab
