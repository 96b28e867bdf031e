#pragma once

#include <memory>
#include <string>
#include <vector>

#include "smoothlab/funcrep.hpp"
#include "smoothlab/spectral.hpp"
#include "smoothlab/translation.hpp"
#include "smoothlab/weighted_space.hpp"

namespace smoothlab {

// Sturm-Liouville weight of the translation in t: the kernel makes
// tau_t(R_n) = Q_n(cos t) R_n with Q_n = R_n^{(0,4)}, whose t-operator is
// A^{-1} d/dt A d/dt with A(t) = sin(t/2) cos^9(t/2).
struct SLWeight {
  static double A(double t);
};

// kappa(delta) = int_0^delta A(v)^{-1} int_0^v A(u) du dv, nested Gauss-Legendre.
double kappa(double delta, int quad_order = 32);

// h_n(delta) = (1 - Q_n(cos delta)) / (n (n+5) kappa(delta)), h_0 = 1.
double h_multiplier(int n, double delta);
std::vector<double> h_multipliers(int n_max, double delta);

enum class HMethod { Integral, Multiplier };
std::string to_string(HMethod m);
HMethod hmethod_from_name(const std::string& name);

struct HOptions {
  HMethod method = HMethod::Multiplier;
  int degree = 64;      // interpolation / expansion degree for callables
  int quad_order = 24;  // nested rule of the H_delta integral route
  TranslationConfig translation{};
};

// c_0 = 16/15, c_k = int H^{k-1}(f, z) (1 - z^2)^2 dz.
double c_coefficient(const FuncRep& f, int k, int degree = 64);

// H^r f. The multiplier route returns a (2,2) Jacobi series, the integral
// route a Chebyshev series.
FuncRep H_apply(const FuncRep& f, int r, const HOptions& opt = {});
// One application of the integral form at a point, |x| <= 1 - 1e-8.
double H_integral_at(const FuncRep& f, double x, int degree = 64);

// H_delta^r f, 0 < delta < pi.
FuncRep H_delta_apply(const FuncRep& f, double delta, int r, const HOptions& opt = {});
double H_delta_integral_at(const FuncRep& f, double delta, double x, const HOptions& opt = {});
// Largest disagreement between the two routes at `probes` points; a value
// above 1e-5 means the weight A does not match the kernel.
double H_delta_method_gap(const FuncRep& f, double delta, int r, int probes = 16, const HOptions& opt = {});

struct ModulusOptions {
  int t_grid = 12;              // g: t-grid {0, delta/g, ..., delta}^r
  int analysis_degree = 1024;   // Jacobi expansion degree for callables
  int x_resolution = 1025;      // norm grid size / minimum quadrature order
  bool refine = true;           // also evaluate on the 2g grid
  double refine_tolerance = 0.02;
  bool strict = false;          // throw when refinement changes the value too much
};

struct ModulusResult {
  double value = 0.0;           // max over the g-grid
  double refined_value = 0.0;   // max over the 2g-grid (= value without refinement)
  bool converged = true;
  std::vector<double> argmax_t;
  int grid_size = 0;
  int r = 0;
  double delta = 0.0;
  int degree = 0;               // Jacobi degree used
};

// Reusable modulus evaluation for one f and one space: the expansion and the
// R_n table are built once.
class ModulusEngine {
 public:
  ModulusEngine(const FuncRep& f, const WeightedSpace& space, const ModulusOptions& opt = {});
  ModulusResult compute(int r, double delta) const;
  const FuncRep& series() const { return series_; }
  double f_norm() const;

 private:
  ModulusOptions opt_;
  FuncRep series_;
  std::shared_ptr<SpectralNorm> norm_;
};

// omega_r(f, delta)_{p,alpha}; requires the DirectInverse regime, r in {1,2,3}.
ModulusResult modulus(const FuncRep& f, int r, double delta, const WeightedSpace& space,
                      const ModulusOptions& opt = {});

}  // namespace smoothlab
