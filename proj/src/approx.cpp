#include "smoothlab/approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"
#include "smoothlab/norms.hpp"
#include "smoothlab/quadrature.hpp"

namespace smoothlab {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd cheb_matrix(const std::vector<double>& x, int n) {
  MatrixXd V(x.size(), n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double t0 = 1.0, t1 = x[i];
    for (int k = 0; k < n; ++k) {
      if (k == 0) {
        V(i, k) = 1.0;
      } else if (k == 1) {
        V(i, k) = x[i];
      } else {
        double t2 = 2.0 * x[i] * t1 - t0;
        t0 = t1;
        t1 = t2;
        V(i, k) = t2;
      }
    }
  }
  return V;
}

FuncRep to_funcrep(const VectorXd& c) { return FuncRep::cheb(std::vector<double>(c.data(), c.data() + c.size())); }

ApproxResult project_l2(const FuncRep& f, int n, const WeightedSpace& space, const ApproxOptions& opt) {
  const int Q = opt.quad_order > 0 ? opt.quad_order : 1024;
  const double a = 2.0 * space.alpha;
  JacobiBasis basis(a, a, n - 1);
  std::vector<double> ip = basis.inner_products(f, Q);
  std::vector<double> b(n);
  for (int k = 0; k < n; ++k) b[k] = ip[k] / basis.norm_sq()[k];
  std::vector<double> xl = cheb::lobatto_points(n - 1), vl(xl.size());
  for (std::size_t i = 0; i < xl.size(); ++i) vl[i] = jacobi_series_eval(b, a, a, xl[i]);
  ApproxResult res;
  res.poly = FuncRep::cheb(n == 1 ? std::vector<double>{vl[0]} : cheb::interp_lobatto(vl));
  auto rule = cached_rule(RuleKind::GaussJacobi, Q, a, a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    double e = f(rule->nodes[i]) - res.poly(rule->nodes[i]);
    s += rule->weights[i] * e * e;
  }
  res.value = std::sqrt(s);
  res.certified_gap = 0.0;
  res.status = "projection";
  return res;
}

// Discrete weighted minimax by exchange on the extrema grid.
ApproxResult remez(const FuncRep& f, int n, const WeightedSpace& space, const ApproxOptions& opt) {
  NormGrid grid = make_norm_grid(space, opt.grid_size + 1);
  std::vector<double> x, w, fv;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.weight[i] <= 0.0) continue;
    x.push_back(grid.x[i]);
    w.push_back(grid.weight[i]);
    fv.push_back(f(grid.x[i]));
    if (!std::isfinite(fv.back())) fail_numerical("best_approx: f is not finite at x = " + std::to_string(x.back()));
  }
  const int M = static_cast<int>(x.size());
  if (M < n + 1) fail_validation("best_approx: grid too small for n");
  MatrixXd V = cheb_matrix(x, n);
  Eigen::Map<const VectorXd> F(fv.data(), M);
  Eigen::Map<const VectorXd> W(w.data(), M);
  const double scale = std::max((W.array() * F.array().abs()).maxCoeff(), 1e-300);

  // Initial reference near the interior Chebyshev points.
  std::vector<int> ref(n + 1);
  for (int j = 0; j <= n; ++j) {
    double target = -std::cos(std::numbers::pi * (j + 0.5) / (n + 1));
    ref[j] = static_cast<int>(std::lower_bound(x.begin(), x.end(), target) - x.begin());
    ref[j] = std::clamp(ref[j], 0, M - 1);
  }
  for (int j = 1; j <= n; ++j) ref[j] = std::max(ref[j], ref[j - 1] + 1);
  for (int j = n; j >= 0; --j) {
    if (ref[j] > M - 1 - (n - j)) ref[j] = M - 1 - (n - j);
    if (j < n) ref[j] = std::min(ref[j], ref[j + 1] - 1);
  }

  ApproxResult res;
  res.status = "iteration limit";
  res.converged = false;
  std::set<std::vector<int>> seen;
  VectorXd c = VectorXd::Zero(n), e(M);
  double h = 0.0, E = 0.0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    res.iterations = it + 1;
    seen.insert(ref);
    MatrixXd A(n + 1, n + 1);
    VectorXd rhs(n + 1);
    for (int j = 0; j <= n; ++j) {
      A.row(j).head(n) = V.row(ref[j]);
      A(j, n) = (j % 2 ? -1.0 : 1.0) / w[ref[j]];
      rhs(j) = fv[ref[j]];
    }
    VectorXd sol = A.fullPivLu().solve(rhs);
    c = sol.head(n);
    h = sol(n);
    e = W.cwiseProduct(F - V * c);
    int gmax = 0;
    E = e.cwiseAbs().maxCoeff(&gmax);
    // Rounding in the reference solve limits the attainable gap to a few ulps of f.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    if (E - std::abs(h) <= std::max(opt.equioscillation_tol * E, floor)) {
      res.converged = true;
      res.status = "converged";
      break;
    }
    // One extremum per run of constant sign.
    std::vector<int> ext;
    for (int i = 0; i < M; ++i) {
      if (ext.empty() || (e(i) >= 0) != (e(ext.back()) >= 0)) {
        ext.push_back(i);
      } else if (std::abs(e(i)) > std::abs(e(ext.back()))) {
        ext.back() = i;
      }
    }
    if (static_cast<int>(ext.size()) < n + 1) {
      res.status = "degenerate reference";
      break;
    }
    // Window of n+1 consecutive extrema containing the global maximum.
    const int L = static_cast<int>(ext.size());
    const int g = static_cast<int>(std::find(ext.begin(), ext.end(), gmax) - ext.begin());
    int best_start = std::clamp(g - n / 2, 0, L - n - 1);
    double best_min = -1.0;
    for (int s = std::max(0, g - n); s <= std::min(g, L - n - 1); ++s) {
      double mn = std::abs(e(ext[s]));
      for (int k = s; k <= s + n; ++k) mn = std::min(mn, std::abs(e(ext[k])));
      if (mn > best_min) {
        best_min = mn;
        best_start = s;
      }
    }
    std::vector<int> next(ext.begin() + best_start, ext.begin() + best_start + n + 1);
    if (next == ref || seen.count(next)) {
      res.status = next == ref ? "stalled" : "cycling";
      break;
    }
    ref = next;
  }
  res.value = E;
  res.poly = to_funcrep(c);
  res.certified_gap = E - std::abs(h);
  for (int i : ref) res.reference.push_back(x[i]);
  int alt = 0;
  double last_sign = 0.0;
  for (int i : ref) {
    if (std::abs(e(i)) < E - 1e-6) continue;
    double sg = e(i) >= 0 ? 1.0 : -1.0;
    if (sg != last_sign) ++alt;
    last_sign = sg;
  }
  res.alternations = alt;
  return res;
}

ApproxResult irls(const FuncRep& f, int n, const WeightedSpace& space, const ApproxOptions& opt) {
  const int Q = opt.quad_order > 0 ? opt.quad_order : 2048;
  NormGrid grid = make_norm_grid(space, Q);
  const int M = static_cast<int>(grid.size());
  MatrixXd V = cheb_matrix(grid.x, n);
  VectorXd F(M), om(M);
  for (int i = 0; i < M; ++i) {
    F(i) = f(grid.x[i]);
    om(i) = grid.quad[i];
  }
  const double p = space.p;
  auto objective = [&](const VectorXd& c) {
    return std::pow((om.array() * (F - V * c).array().abs().pow(p)).sum(), 1.0 / p);
  };
  auto wls = [&](const VectorXd& wt) -> VectorXd {
    VectorXd s = wt.cwiseSqrt();
    MatrixXd A = s.asDiagonal() * V;
    return A.colPivHouseholderQr().solve(s.cwiseProduct(F));
  };
  VectorXd c = wls(om);
  double J = objective(c);
  const double scale = std::max(F.cwiseAbs().maxCoeff(), 1e-300);
  ApproxResult res;
  res.converged = true;
  for (double eps = opt.eps_start; eps >= opt.eps_end * 0.999; eps *= 0.1) {
    bool stage_done = false;
    for (int it = 0; it < opt.max_iterations; ++it) {
      ++res.iterations;
      VectorXd r = (F - V * c).cwiseAbs();
      VectorXd wt = om.array() * (r.array().square() + (eps * scale) * (eps * scale)).pow(0.5 * (p - 2.0));
      VectorXd dir = wls(wt) - c;
      double t = 1.0, Jn = objective(c + dir);
      while (Jn >= J && t > 1e-6) {
        t *= 0.5;
        Jn = objective(c + t * dir);
      }
      if (Jn >= J) {
        stage_done = true;
        break;
      }
      const double gain = J - Jn;
      c += t * dir;
      J = Jn;
      if (gain <= 1e-13 * J) {
        stage_done = true;
        break;
      }
    }
    if (!stage_done) res.converged = false;
  }
  res.status = res.converged ? "converged" : "stagnated";
  res.value = J;
  res.poly = to_funcrep(c);
  return res;
}

}  // namespace

ApproxResult best_approx(const FuncRep& f, int n, const WeightedSpace& space, const ApproxOptions& opt) {
  if (n < 1) fail_validation("best_approx: n must be at least 1");
  if (opt.grid_size < 8) fail_validation("best_approx: grid_size must be at least 8");
  ApproxResult res;
  if (f.is_series() && f.degree() < n) {
    res.poly = f.as_cheb();
    res.value = 0.0;
    res.certified_gap = 0.0;
    res.status = "exact";
    res.alternations = n + 1;
  } else if (space.p_inf()) {
    res = remez(f, n, space, opt);
  } else if (space.p == 2.0) {
    res = project_l2(f, n, space, opt);
  } else {
    res = irls(f, n, space, opt);
  }
  res.n = n;
  return res;
}

BernsteinMarkovRatios bernstein_markov_probe(const FuncRep& P, const WeightedSpace& space, double rho,
                                             int resolution) {
  space.require(Regime::BernsteinMarkov);
  if (!P.is_series()) fail_validation("bernstein_markov_probe: P must be a polynomial series");
  if (!(rho > 0.0)) fail_validation("bernstein_markov_probe: rho must be positive");
  BernsteinMarkovRatios out;
  std::vector<double> c = cheb::trim(P.cheb_coeffs(), 0.0);
  out.n = static_cast<int>(c.size());
  const double n = out.n;
  const int res = std::max(resolution, out.n + 8);
  const double base = weighted_norm(FuncRep::cheb(c), space, res);
  if (base == 0.0) fail_validation("bernstein_markov_probe: P is zero");
  WeightedSpace half(space.p, space.alpha + 0.5);
  WeightedSpace shifted(space.p, space.alpha + rho);
  out.derivative = weighted_norm(FuncRep::cheb(cheb::derivative(c)), half, res) / (n * base);
  out.weight_shift = base / (std::pow(n, 2.0 * rho) * weighted_norm(FuncRep::cheb(c), shifted, res));
  out.corollary = weighted_norm(FuncRep::cheb(apply_D_cheb(c, 2.0, 2.0)), space, res) / (n * n * base);
  return out;
}

EDBound en_from_D_bound(const FuncRep& f, int r, int n, const WeightedSpace& space, const ApproxOptions& opt) {
  space.require(Regime::ED);
  if (!f.is_series()) fail_validation("en_from_D_bound: f must be a polynomial series");
  if (r < 1) fail_validation("en_from_D_bound: r must be at least 1");
  EDBound out;
  out.En = best_approx(f, n, space, opt).value;
  const int res = std::max(512, f.degree() + 8);
  out.bound = std::pow(static_cast<double>(n), -2.0 * r) * weighted_norm(apply_D(f, 2.0, 2.0, r), space, res);
  out.ratio = out.bound == 0.0 ? 0.0 : out.En / out.bound;
  return out;
}

}  // namespace smoothlab
