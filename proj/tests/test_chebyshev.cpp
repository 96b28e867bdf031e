#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/funcrep.hpp"

using namespace smoothlab;

namespace {

double cheb_T(int k, double x) { return std::cos(k * std::acos(x)); }

}  // namespace

TEST(ToCheb, CubeIsExact) {
  FuncRep f = to_cheb([](double x) { return x * x * x; }, 3);
  std::vector<double> want{0.0, 0.75, 0.0, 0.25};
  ASSERT_EQ(f.coefficients().size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(f.coefficients()[k], want[k], 1e-15);
}

TEST(ToCheb, ConstantAnyDegree) {
  for (int n : {0, 1, 5, 30}) {
    FuncRep f = to_cheb([](double) { return 1.0; }, n);
    EXPECT_NEAR(f.coefficients()[0], 1.0, 1e-15);
    for (int k = 1; k <= n; ++k) EXPECT_NEAR(f.coefficients()[k], 0.0, 1e-15);
  }
}

TEST(ToCheb, ExpRoundTrip) {
  FuncRep f = to_cheb([](double x) { return std::exp(x); }, 24);
  for (int i = 0; i <= 200; ++i) {
    double x = -1.0 + i / 100.0;
    EXPECT_NEAR(f(x), std::exp(x), 1e-12);
  }
}

TEST(ToCheb, NegativeDegreeRejected) {
  EXPECT_THROW(to_cheb([](double x) { return x; }, -1), ValidationError);
}

TEST(ToCheb, ReproducesPolynomials) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int deg : {0, 1, 4, 9, 17}) {
    std::vector<double> a(deg + 1);
    for (double& v : a) v = u(rng);
    auto p = [&](double x) {
      double s = 0.0;
      for (int k = deg; k >= 0; --k) s = s * x + a[k];
      return s;
    };
    FuncRep f = to_cheb(p, deg);
    FuncRep g = FuncRep::monomial(a);
    for (int k = 0; k <= deg; ++k) EXPECT_NEAR(f.coefficients()[k], g.coefficients()[k], 1e-13);
  }
}

TEST(Cheb, ClenshawMatchesTrigDefinition) {
  std::vector<double> c{0.3, -1.2, 0.5, 0.25, -0.125, 0.7};
  for (double x : {-1.0, -0.7, 0.0, 0.33, 0.99, 1.0}) {
    double want = 0.0;
    for (int k = 0; k < 6; ++k) want += c[k] * cheb_T(k, x);
    EXPECT_NEAR(cheb::eval(c, x), want, 1e-13);
  }
}

TEST(Cheb, DerivativeAndAntiderivative) {
  // f = x^4 - 2x + 1, f' = 4x^3 - 2
  std::vector<double> f = cheb::from_monomial({1.0, -2.0, 0.0, 0.0, 1.0});
  std::vector<double> d = cheb::derivative(f);
  for (double x : {-0.9, -0.2, 0.4, 1.0}) EXPECT_NEAR(cheb::eval(d, x), 4 * x * x * x - 2.0, 1e-13);
  std::vector<double> F = cheb::antiderivative(f);
  for (double x : {-1.0, -0.3, 0.0, 0.8}) {
    double want = std::pow(x, 5) / 5.0 - x * x + x;
    EXPECT_NEAR(cheb::eval(F, x), want, 1e-13);
  }
}

TEST(Cheb, ProductAndMulX) {
  std::vector<double> a = cheb::from_monomial({1.0, 2.0, -1.0});
  std::vector<double> b = cheb::from_monomial({0.5, 0.0, 0.0, 3.0});
  std::vector<double> ab = cheb::mul(a, b);
  std::vector<double> xa = cheb::mul_x(a);
  for (double x : {-1.0, -0.5, 0.1, 0.77}) {
    EXPECT_NEAR(cheb::eval(ab, x), cheb::eval(a, x) * cheb::eval(b, x), 1e-13);
    EXPECT_NEAR(cheb::eval(xa, x), x * cheb::eval(a, x), 1e-14);
  }
}

TEST(Cheb, InteriorInterpolationExact) {
  std::vector<double> c{0.1, -0.4, 0.2, 0.9, -0.3};
  std::vector<double> x = cheb::interior_points(4), v(5);
  for (int i = 0; i < 5; ++i) {
    EXPECT_GT(x[i], -1.0);
    EXPECT_LT(x[i], 1.0);
    v[i] = cheb::eval(c, x[i]);
  }
  std::vector<double> back = cheb::interp_interior(v);
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(back[k], c[k], 1e-14);
}

TEST(FuncRep, SeriesEvaluateAsTheirSums) {
  std::vector<double> c{0.5, -0.25, 0.125, 0.0625};
  FuncRep f = FuncRep::cheb(c);
  for (int i = 0; i < 16; ++i) {
    double x = -1.0 + 2.0 * i / 15.0;
    double want = 0.0;
    for (int k = 0; k < 4; ++k) want += c[k] * cheb_T(k, x);
    EXPECT_NEAR(f(x), want, 1e-12);
  }
  EXPECT_EQ(f.degree(), 3);
}

TEST(FuncRep, Arithmetic) {
  FuncRep a = FuncRep::monomial({0.0, 1.0});
  FuncRep b = FuncRep::callable([](double x) { return x * x; }, "sq");
  FuncRep s = a + b;
  FuncRep d = 2.0 * a - FuncRep::constant(1.0);
  EXPECT_NEAR(s(0.5), 0.75, 1e-15);
  EXPECT_TRUE(d.is_series());
  EXPECT_NEAR(d(0.25), -0.5, 1e-15);
}
