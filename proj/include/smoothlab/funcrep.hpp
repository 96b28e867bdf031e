#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace smoothlab {

// A function on [-1,1]: a closed-form callable, a Chebyshev series, or a
// series in Jacobi polynomials R_n^{(nu,mu)} normalized by R_n(1) = 1.
class FuncRep {
 public:
  enum class Kind { Callable, Cheb, Jacobi };
  using Fn = std::function<double(double)>;

  FuncRep();  // the zero function

  static FuncRep callable(Fn f, std::string label = "callable");
  static FuncRep cheb(std::vector<double> coeffs);
  static FuncRep jacobi(std::vector<double> coeffs, double nu = 2.0, double mu = 2.0);
  static FuncRep constant(double c);
  static FuncRep monomial(const std::vector<double>& coeffs);

  Kind kind() const { return kind_; }
  bool is_series() const { return kind_ != Kind::Callable; }
  double operator()(double x) const;

  // Polynomial degree of a series (length - 1), -1 for callables.
  int degree() const;
  const std::vector<double>& coefficients() const { return coeffs_; }
  double nu() const { return nu_; }
  double mu() const { return mu_; }
  const std::string& label() const { return label_; }

  // Chebyshev coefficients: exact (up to rounding) for series, interpolated at
  // `degree_if_callable` for callables.
  std::vector<double> cheb_coeffs(int degree_if_callable = 64) const;
  FuncRep as_cheb(int degree_if_callable = 64) const;

 private:
  Kind kind_ = Kind::Cheb;
  std::shared_ptr<const Fn> fn_;
  std::vector<double> coeffs_{0.0};
  double nu_ = 0.0;
  double mu_ = 0.0;
  std::string label_;
};

// Chebyshev interpolant at degree+1 extrema points.
FuncRep to_cheb(const FuncRep::Fn& f, int degree);

FuncRep operator+(const FuncRep& a, const FuncRep& b);
FuncRep operator-(const FuncRep& a, const FuncRep& b);
FuncRep operator*(double s, const FuncRep& a);

}  // namespace smoothlab
