#pragma once

#include <vector>

#include "smoothlab/funcrep.hpp"

namespace smoothlab {

// R_n^{(nu,mu)}(x) = P_n^{(nu,mu)}(x) / P_n^{(nu,mu)}(1), weight (1-x)^nu (1+x)^mu.
double eval_R(int n, double nu, double mu, double x);
// out[k] = R_k(x) for k = 0..n_max.
void eval_R_all(int n_max, double nu, double mu, double x, double* out);
std::vector<double> eval_R_all(int n_max, double nu, double mu, double x);
double jacobi_series_eval(const std::vector<double>& b, double nu, double mu, double x);
// P_n^{(nu,mu)}(1) = binomial(n + nu, n).
double jacobi_value_at_one(int n, double nu);
// Eigenvalue of D_{x,nu,mu} on R_n: -n(n + nu + mu + 1).
double jacobi_eigenvalue(int n, double nu, double mu);

class JacobiBasis {
 public:
  JacobiBasis(double nu, double mu, int max_degree);

  double nu() const { return nu_; }
  double mu() const { return mu_; }
  int max_degree() const { return max_degree_; }
  double value_at_one() const { return 1.0; }
  // norm_sq()[n] = int R_n^2 (1-x)^nu (1+x)^mu dx, by quadrature.
  const std::vector<double>& norm_sq() const { return norm_sq_; }

  // Inner products a_n = int f R_n w, n = 0..max_degree.
  std::vector<double> inner_products(const FuncRep& f, int quad_order) const;
  // Series coefficients b_n = a_n / norm_sq[n].
  FuncRep analyze(const FuncRep& f, int quad_order) const;
  FuncRep synthesize(const std::vector<double>& coeffs) const;

 private:
  double nu_;
  double mu_;
  int max_degree_;
  std::vector<double> norm_sq_;
};

struct FourierOptions {
  int quad_order = 0;  // 0: max(64, N + 8)
  bool self_check = true;
  double tolerance = 1e-8;
};

// a_n(f) = int f R_n (1-x^2)^2 dx for n = 0..N, (2,2) family. With
// self_check, the result is recomputed at twice the order and a discrepancy
// above the tolerance throws NumericalError.
std::vector<double> fourier_jacobi(const FuncRep& f, int N, const FourierOptions& opt = {});

// Jacobi (nu,mu) series of f truncated at degree N. Polynomial inputs of
// degree <= N are reproduced exactly.
FuncRep jacobi_expand(const FuncRep& f, int N, double nu = 2.0, double mu = 2.0, int quad_order = 0);

// D_{x,nu,mu} = (1-x^2) d^2/dx^2 + (mu - nu - (nu+mu+2)x) d/dx applied r times,
// exactly on coefficients. Callables are interpolated at `callable_degree`.
FuncRep apply_D(const FuncRep& f, double nu, double mu, int r, int callable_degree = 64);
std::vector<double> apply_D_cheb(const std::vector<double>& c, double nu, double mu);

}  // namespace smoothlab
