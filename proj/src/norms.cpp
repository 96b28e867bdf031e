#include "smoothlab/norms.hpp"

#include <cmath>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/quadrature.hpp"

namespace smoothlab {

double NormGrid::norm(const double* v) const {
  const std::size_t n = x.size();
  if (space.p_inf()) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (weight[i] == 0.0) continue;
      double a = std::abs(v[i]) * weight[i];
      if (!std::isfinite(a)) fail_numerical("weighted_norm: non-finite value at x = " + std::to_string(x[i]));
      m = std::max(m, a);
    }
    return m;
  }
  const double p = space.p;
  double s = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < n; ++i) s += quad[i] * v[i] * v[i];
  } else if (p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) s += quad[i] * std::abs(v[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) s += quad[i] * std::pow(std::abs(v[i]), p);
  }
  if (!std::isfinite(s)) fail_numerical("weighted_norm: non-finite values at quadrature nodes");
  return p == 2.0 ? std::sqrt(s) : (p == 1.0 ? s : std::pow(s, 1.0 / p));
}

NormGrid make_norm_grid(const WeightedSpace& space, int resolution) {
  if (resolution < 1) fail_validation("norm grid resolution must be positive");
  NormGrid g;
  g.space = space;
  if (space.p_inf()) {
    int n = std::max(resolution - 1, 2);
    if (n % 2) ++n;
    g.x = cheb::lobatto_points(n);
    g.weight.resize(g.x.size());
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      double s = 1.0 - g.x[i] * g.x[i];
      g.weight[i] = space.alpha == 0.0 ? 1.0 : (s <= 0.0 ? 0.0 : std::pow(s, space.alpha));
    }
  } else {
    double e = space.p * space.alpha;
    auto rule = cached_rule(RuleKind::GaussJacobi, resolution, e, e);
    g.x = rule->nodes;
    g.quad = rule->weights;
  }
  return g;
}

double weighted_norm(const FuncRep& f, const WeightedSpace& space, int resolution) {
  if (resolution < 32) fail_validation("weighted_norm: resolution must be at least 32");
  NormGrid g = make_norm_grid(space, resolution);
  std::vector<double> v = g.sample(f);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) && !(g.space.p_inf() && g.weight[i] == 0.0)) {
      fail_numerical("weighted_norm: f is not finite at x = " + std::to_string(g.x[i]));
    }
  }
  return g.norm(v);
}

}  // namespace smoothlab
