#pragma once

#include <limits>
#include <string>
#include <vector>

#include "smoothlab/funcrep.hpp"
#include "smoothlab/weighted_space.hpp"

namespace smoothlab {

struct ApproxOptions {
  int grid_size = 2048;         // p = inf: Chebyshev extrema grid (grid_size + 1 points)
  int quad_order = 0;           // p < inf: 0 chooses 1024 (p = 2) or 2048
  double equioscillation_tol = 1e-8;
  int max_iterations = 100;     // exchange steps / IRLS steps per epsilon stage
  double eps_start = 1e-2;
  double eps_end = 1e-10;
};

struct ApproxResult {
  int n = 0;                    // degree <= n - 1
  double value = 0.0;           // ||f - poly||_{p,alpha}
  FuncRep poly;                 // Chebyshev series
  int iterations = 0;
  // Upper minus lower bound (exchange), 0 for the exact projection, NaN otherwise.
  double certified_gap = std::numeric_limits<double>::quiet_NaN();
  bool converged = true;
  std::string status;
  std::vector<double> reference;  // p = inf: final reference points
  int alternations = 0;           // p = inf: alternation count within 1e-6 of value
};

// E_n(f)_{p,alpha} = inf over polynomials P of degree <= n - 1 of ||f - P||.
ApproxResult best_approx(const FuncRep& f, int n, const WeightedSpace& space, const ApproxOptions& opt = {});

struct BernsteinMarkovRatios {
  int n = 0;
  double derivative = 0.0;    // ||P'||_{p,alpha+1/2} / (n ||P||_{p,alpha})
  double weight_shift = 0.0;  // ||P||_{p,alpha} / (n^{2 rho} ||P||_{p,alpha+rho})
  double corollary = 0.0;     // ||D P||_{p,alpha} / (n^2 ||P||_{p,alpha})
};

// n = degree(P) + 1; requires the BernsteinMarkov regime.
BernsteinMarkovRatios bernstein_markov_probe(const FuncRep& P, const WeightedSpace& space, double rho = 0.5,
                                             int resolution = 512);

struct EDBound {
  double En = 0.0;
  double bound = 0.0;  // n^{-2r} ||D^r f||
  double ratio = 0.0;  // En / bound, 0 when both vanish
};

// Requires a polynomial f and the ED regime.
EDBound en_from_D_bound(const FuncRep& f, int r, int n, const WeightedSpace& space, const ApproxOptions& opt = {});

}  // namespace smoothlab
