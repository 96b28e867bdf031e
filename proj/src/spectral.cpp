#include "smoothlab/spectral.hpp"

#include <cmath>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"

namespace smoothlab {

FuncRep spectral_series(const FuncRep& f, int max_degree) {
  if (f.kind() == FuncRep::Kind::Jacobi && f.nu() == 2.0 && f.mu() == 2.0) return f;
  if (f.is_series()) return jacobi_expand(f, std::max(f.degree(), 0));
  std::vector<double> b = jacobi_expand(f, max_degree, 2.0, 2.0, 2 * max_degree + 2).coefficients();
  // Trim on the orthonormal scale: b_n sqrt(h_n), h_n = int R_n^2 (1-x^2)^2.
  std::vector<double> scaled(b.size());
  for (std::size_t n = 0; n < b.size(); ++n) {
    const double m = static_cast<double>(n);
    scaled[n] = b[n] * std::sqrt(128.0 / ((2 * m + 5) * (m + 1) * (m + 2) * (m + 3) * (m + 4)));
  }
  b.resize(cheb::trim(scaled, 1e-14).size());
  return FuncRep::jacobi(std::move(b));
}

SpectralNorm::SpectralNorm(NormGrid grid, int degree) : grid_(std::move(grid)), degree_(degree) {
  if (degree < 0) fail_validation("SpectralNorm: negative degree");
  const int G = static_cast<int>(grid_.size());
  R_.resize(G, degree + 1);
  std::vector<double> r(degree + 1);
  for (int i = 0; i < G; ++i) {
    eval_R_all(degree, 2.0, 2.0, grid_.x[i], r.data());
    for (int n = 0; n <= degree; ++n) R_(i, n) = r[n];
  }
}

std::vector<double> SpectralNorm::norms(const Eigen::MatrixXd& C) const {
  if (C.rows() != degree_ + 1) fail_validation("SpectralNorm: coefficient rows do not match the degree");
  Eigen::MatrixXd V = R_ * C;
  std::vector<double> out(C.cols());
  for (Eigen::Index j = 0; j < C.cols(); ++j) out[j] = grid_.norm(V.col(j).data());
  return out;
}

double SpectralNorm::norm(const std::vector<double>& coeffs) const {
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(degree_ + 1, 1);
  for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= degree_; ++n) C(n, 0) = coeffs[n];
  return norms(C)[0];
}

}  // namespace smoothlab
