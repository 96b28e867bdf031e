#include "smoothlab/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smoothlab/errors.hpp"

namespace smoothlab::cheb {

namespace {
constexpr double kPi = std::numbers::pi;
}

double eval(const std::vector<double>& c, double x) {
  if (c.empty()) return 0.0;
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    double t = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = t;
  }
  return x * b1 - b2 + c[0];
}

std::vector<double> derivative(const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n <= 1) return {0.0};
  std::vector<double> d(n - 1, 0.0);
  for (std::size_t k = n - 1; k-- > 0;) {
    d[k] = (k + 2 < n - 1 ? d[k + 2] : 0.0) + 2.0 * static_cast<double>(k + 1) * c[k + 1];
  }
  d[0] *= 0.5;
  return d;
}

std::vector<double> antiderivative(const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n == 0) return {0.0};
  std::vector<double> out(n + 1, 0.0);
  auto coef = [&](std::size_t k) { return k < n ? c[k] : 0.0; };
  for (std::size_t k = 1; k <= n; ++k) {
    double lo = (k == 1) ? 2.0 * c[0] : coef(k - 1);
    out[k] = (lo - coef(k + 1)) / (2.0 * static_cast<double>(k));
  }
  double at0 = 0.0;
  for (std::size_t k = 2; k <= n; k += 2) at0 += (k % 4 == 0 ? 1.0 : -1.0) * out[k];
  out[0] = -at0;
  return out;
}

std::vector<double> mul_x(const std::vector<double>& c) {
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == 0) {
      out[1] += c[0];
    } else {
      out[k + 1] += 0.5 * c[k];
      out[k - 1] += 0.5 * c[k];
    }
  }
  return out;
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {0.0};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0.0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      double h = 0.5 * a[j] * b[k];
      out[j + k] += h;
      out[j > k ? j - k : k - j] += h;
    }
  }
  return out;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

std::vector<double> scale(const std::vector<double>& a, double s) {
  std::vector<double> out(a);
  for (double& v : out) v *= s;
  return out;
}

std::vector<double> from_monomial(const std::vector<double>& a) {
  if (a.empty()) return {0.0};
  std::vector<double> out{a.back()};
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    out = mul_x(out);
    out[0] += a[k];
  }
  return out;
}

std::vector<double> trim(std::vector<double> c, double tol) {
  double mx = 0.0;
  for (double v : c) mx = std::max(mx, std::abs(v));
  while (c.size() > 1 && std::abs(c.back()) <= tol * mx) c.pop_back();
  if (c.empty()) c.push_back(0.0);
  return c;
}

std::vector<double> lobatto_points(int n) {
  if (n < 0) fail_validation("lobatto_points: negative degree");
  if (n == 0) return {0.0};
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = -std::cos(kPi * i / n);
  x[0] = -1.0;
  x[n] = 1.0;
  if (n % 2 == 0) x[n / 2] = 0.0;
  return x;
}

std::vector<double> interior_points(int n) {
  if (n < 0) fail_validation("interior_points: negative degree");
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = -std::cos(kPi * (i + 0.5) / (n + 1));
  if (n % 2 == 0) x[n / 2] = 0.0;
  return x;
}

std::vector<double> interp_lobatto(const std::vector<double>& values) {
  if (values.empty()) fail_validation("interp_lobatto: no values");
  const int n = static_cast<int>(values.size()) - 1;
  if (n == 0) return {values[0]};
  std::vector<double> table(2 * n);
  for (int m = 0; m < 2 * n; ++m) table[m] = std::cos(kPi * m / n);
  // values[i] sits at -cos(pi i / n) = cos(pi (n - i) / n)
  std::vector<double> c(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      double f = values[n - j];
      double w = (j == 0 || j == n) ? 0.5 : 1.0;
      s += w * f * table[(static_cast<long>(j) * k) % (2 * n)];
    }
    c[k] = 2.0 * s / n;
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return c;
}

std::vector<double> interp_interior(const std::vector<double>& values) {
  if (values.empty()) fail_validation("interp_interior: no values");
  const int n = static_cast<int>(values.size()) - 1;
  const int period = 4 * (n + 1);
  std::vector<double> table(period);
  for (int m = 0; m < period; ++m) table[m] = std::cos(kPi * m / (2.0 * (n + 1)));
  std::vector<double> c(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      s += values[n - j] * table[(static_cast<long>(k) * (2 * j + 1)) % period];
    }
    c[k] = 2.0 * s / (n + 1);
  }
  c[0] *= 0.5;
  return c;
}

}  // namespace smoothlab::cheb
