#pragma once

// Test-side reference values computed independently of the library.

#include <cmath>
#include <random>
#include <vector>

namespace oracle {

inline long double binom(long double n, int k) {
  return std::exp(std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L));
}

// P_n^{(a,b)}(x) / P_n^{(a,b)}(1) from the explicit binomial sum.
inline double R(int n, double a, double b, double x) {
  long double s = 0.0L, xl = x;
  for (int k = 0; k <= n; ++k) {
    s += binom(n + a, n - k) * binom(n + b, k) * std::pow((xl - 1.0L) / 2.0L, k) *
         std::pow((xl + 1.0L) / 2.0L, n - k);
  }
  return static_cast<double>(s / binom(n + a, n));
}

inline double R22(int n, double x) { return R(n, 2.0, 2.0, x); }
// y-side family of the translation kernel.
inline double Q(int n, double y) { return R(n, 0.0, 4.0, y); }

// Monomial coefficients of a seeded random polynomial.
inline std::vector<double> random_poly(unsigned seed, int degree) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(degree + 1);
  for (double& v : c) v = u(rng);
  return c;
}

inline double horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
  return s;
}

// Composite Simpson rule, for smooth integrands in tests.
template <class F>
double simpson(F&& f, double a, double b, int panels = 2000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace oracle
