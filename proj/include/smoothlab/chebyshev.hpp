#pragma once

#include <functional>
#include <vector>

namespace smoothlab {

// Coefficient-level algebra on Chebyshev series sum c[k] T_k(x).
namespace cheb {

double eval(const std::vector<double>& c, double x);
std::vector<double> derivative(const std::vector<double>& c);
// Antiderivative with value 0 at x = 0.
std::vector<double> antiderivative(const std::vector<double>& c);
std::vector<double> mul_x(const std::vector<double>& c);
std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> scale(const std::vector<double>& a, double s);
std::vector<double> from_monomial(const std::vector<double>& a);
// Drops trailing coefficients with |c_k| <= tol * max|c|; keeps at least one.
std::vector<double> trim(std::vector<double> c, double tol = 0.0);

// Points cos(pi j / n), j = n..0, i.e. increasing, n+1 points; n = 0 gives {0}.
std::vector<double> lobatto_points(int n);
// Points cos(pi (j + 1/2) / (n+1)), increasing, n+1 points (all interior).
std::vector<double> interior_points(int n);

// Interpolant of degree n through lobatto_points(n).
std::vector<double> interp_lobatto(const std::vector<double>& values);
// Interpolant of degree n through interior_points(n).
std::vector<double> interp_interior(const std::vector<double>& values);

}  // namespace cheb

}  // namespace smoothlab
