#pragma once

#include <vector>

#include "smoothlab/funcrep.hpp"
#include "smoothlab/weighted_space.hpp"

namespace smoothlab {

// Discretization of ||.||_{p,alpha}. For p < inf the nodes and weights are a
// Gauss-Jacobi(p alpha, p alpha) rule; for p = inf the nodes are Chebyshev
// extrema (odd count, so x = 0 is included) and `weight` holds (1-x^2)^alpha.
struct NormGrid {
  WeightedSpace space;
  std::vector<double> x;
  std::vector<double> quad;    // p < inf only
  std::vector<double> weight;  // p = inf only

  std::size_t size() const { return x.size(); }
  double norm(const double* values) const;
  double norm(const std::vector<double>& values) const { return norm(values.data()); }
  template <class F>
  std::vector<double> sample(F&& f) const {
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = f(x[i]);
    return v;
  }
};

NormGrid make_norm_grid(const WeightedSpace& space, int resolution);

// ||f||_{p,alpha}; `resolution` is the quadrature order (p < inf) or the grid
// size (p = inf).
double weighted_norm(const FuncRep& f, const WeightedSpace& space, int resolution = 64);

}  // namespace smoothlab
