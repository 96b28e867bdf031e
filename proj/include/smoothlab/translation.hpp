#pragma once

#include <vector>

#include "smoothlab/funcrep.hpp"
#include "smoothlab/weighted_space.hpp"

namespace smoothlab {

enum class TranslationForm { TForm, YForm };

struct TranslationConfig {
  // t-form: number of trapezoid panels on [0, pi] in phi; y-form: number of
  // Gauss-Chebyshev nodes in z. Both integrate polynomial f of degree
  // <= 2 quad_order - 5 exactly.
  int quad_order = 64;
  TranslationForm form = TranslationForm::TForm;
  // Cost guard for nested differences, O(quad_order^r) per point.
  int r_max = 3;
  // Added to B; nonzero only for fault-injection runs.
  double kernel_perturbation = 0.0;

  void validate() const;
};

struct KernelValue {
  double R;
  double B;
};

// R = x y - sqrt(1-x^2) sqrt(1-y^2) z (clamped to [-1,1]) and
// B = 2 (sqrt(1-x^2) y + x z sqrt(1-y^2) + sqrt(1-x^2)(1-y)(1-z^2))^2 - (1 - R^2).
KernelValue kernel_B(double y, double x, double z);

// tau-hat_t(f, x) (t-form) or tau_y(f, x) (y-form), selected by cfg.form.
// |x| = 1 is handled by Richardson extrapolation from |x| = 1 - 1e-6.
double translate(const FuncRep& f, double t_or_y, double x, const TranslationConfig& cfg = {});
double translate_t(const FuncRep& f, double t, double x, const TranslationConfig& cfg = {});
double translate_y(const FuncRep& f, double y, double x, const TranslationConfig& cfg = {});

struct DifferenceRequest {
  std::vector<double> t;
  int r() const { return static_cast<int>(t.size()); }
  void validate() const;
};

// Delta^r_{t_1..t_r}(f, x) = Delta_{t_r}(Delta^{r-1}_{t_1..t_{r-1}} f, x) by nested
// kernel quadrature.
double difference_r(const FuncRep& f, const DifferenceRequest& req, double x, const TranslationConfig& cfg = {});
// The nested difference as a function of x.
FuncRep difference_function(const FuncRep& f, const DifferenceRequest& req, const TranslationConfig& cfg = {});

// Chebyshev interpolant (at `degree`+1 interior points) of x -> tau-hat_t(f, x).
FuncRep translate_series(const FuncRep& f, double t, int degree, const TranslationConfig& cfg = {});

// Multiplier of the translation on R_n^{(2,2)}: tau_y(R_n, x) = R_n(x) Q_n(y)
// with Q_n = R_n^{(0,4)}.
double y_multiplier(int n, double y);
// Spectral route on a (2,2) Jacobi series: b_n -> b_n Q_n(cos t).
FuncRep translate_spectral(const FuncRep& jacobi22, double t);
// b_n -> b_n prod_j (Q_n(cos t_j) - 1).
FuncRep difference_spectral(const FuncRep& jacobi22, const std::vector<double>& t);

struct ProbeOptions {
  int resolution = 128;
  TranslationConfig translation;
};

// max over trials of ||tau-hat_t f|| / ||f|| in `space`.
double operator_norm_probe(double t, const WeightedSpace& space, const std::vector<FuncRep>& trials,
                           const ProbeOptions& opt = {});

}  // namespace smoothlab
