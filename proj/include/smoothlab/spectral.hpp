#pragma once

#include <Eigen/Dense>
#include <vector>

#include "smoothlab/funcrep.hpp"
#include "smoothlab/norms.hpp"

namespace smoothlab {

// (2,2) Jacobi series of f: exact for series input, otherwise a quadrature
// expansion at `max_degree` with trailing coefficients below 1e-14 relative
// (orthonormal scale) trimmed.
FuncRep spectral_series(const FuncRep& f, int max_degree);

// Values of R_0..R_N on a norm grid; turns coefficient columns into norms.
class SpectralNorm {
 public:
  SpectralNorm(NormGrid grid, int degree);

  int degree() const { return degree_; }
  const NormGrid& grid() const { return grid_; }
  // ||sum_n C(n, j) R_n||_{p,alpha} for every column j of C.
  std::vector<double> norms(const Eigen::MatrixXd& C) const;
  double norm(const std::vector<double>& coeffs) const;

 private:
  NormGrid grid_;
  int degree_;
  Eigen::MatrixXd R_;  // grid size x (degree+1)
};

}  // namespace smoothlab
