#pragma once

#include <limits>
#include <string>

#include "smoothlab/funcrep.hpp"
#include "smoothlab/weighted_space.hpp"

namespace smoothlab {

struct KFunctionalOptions {
  int search_degree = 32;
  int resolution = 0;  // 0: 513 grid points (p = inf) or quadrature order 512
  bool certify = true; // recompute at search_degree / 2 and require no increase
  int max_iterations = 200;
  double tolerance = 1e-10;
};

struct KFunctionalResult {
  double value = 0.0;
  FuncRep minimizer;  // Chebyshev series of degree <= search_degree
  int search_degree = 0;
  double fit_term = 0.0;     // ||f - g||
  double smooth_term = 0.0;  // delta^{2r} ||D^r g||
  int iterations = 0;
  std::string solver;
  // Dual objective of the discretized problem (p = inf), NaN otherwise.
  double lower_bound = std::numeric_limits<double>::quiet_NaN();
  double coarse_value = std::numeric_limits<double>::quiet_NaN();  // value at search_degree / 2
};

// K_r(f, delta^{2r})_{p,alpha} = inf_g ||f - g|| + delta^{2r} ||D^r g|| over
// polynomials g of degree <= search_degree. p = 2: regularization path of
// Tikhonov problems with golden-section refinement; p = inf: linear program;
// other p: iteratively reweighted least squares.
KFunctionalResult k_functional(const FuncRep& f, int r, double delta, const WeightedSpace& space,
                               const KFunctionalOptions& opt = {});

}  // namespace smoothlab
