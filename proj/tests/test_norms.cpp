#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "smoothlab/errors.hpp"
#include "smoothlab/norms.hpp"

using namespace smoothlab;

TEST(WeightedNorm, ConstantExamples) {
  FuncRep one = FuncRep::constant(1.0);
  EXPECT_NEAR(weighted_norm(one, WeightedSpace(2.0, 0.0)), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(weighted_norm(one, WeightedSpace(1.0, 2.0)), 16.0 / 15.0, 1e-14);
  EXPECT_NEAR(weighted_norm(one, WeightedSpace(WeightedSpace::kInf, 1.0)), 1.0, 1e-15);
}

TEST(WeightedNorm, OddPAgainstClosedForm) {
  // ||x||_{3,0} = (2 int_0^1 x^3 dx)^{1/3} = (1/2)^{1/3}
  FuncRep x = FuncRep::monomial({0.0, 1.0});
  EXPECT_NEAR(weighted_norm(x, WeightedSpace(3.0, 0.0), 64), std::cbrt(0.5), 1e-6);
  // ||x||_{2,1}^2 = int x^2 (1-x^2)^2 = 16/105
  EXPECT_NEAR(weighted_norm(x, WeightedSpace(2.0, 1.0)), std::sqrt(16.0 / 105.0), 1e-14);
  // ||x||_{inf,1} = max x(1-x^2) = 2/(3 sqrt 3) at x = 1/sqrt 3
  EXPECT_NEAR(weighted_norm(x, WeightedSpace(WeightedSpace::kInf, 1.0), 4001), 2.0 / (3.0 * std::sqrt(3.0)), 1e-6);
}

TEST(WeightedNorm, HomogeneousAndTriangle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double p : {1.0, 1.5, 2.0, 3.0, WeightedSpace::kInf}) {
    WeightedSpace sp(p, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> a(6), b(6);
      for (double& v : a) v = u(rng);
      for (double& v : b) v = u(rng);
      FuncRep f = FuncRep::cheb(a), g = FuncRep::cheb(b);
      double c = 4.0 * u(rng);
      double nf = weighted_norm(f, sp), ng = weighted_norm(g, sp);
      EXPECT_NEAR(weighted_norm(c * f, sp), std::abs(c) * nf, 1e-12 * (1.0 + std::abs(c) * nf));
      EXPECT_LE(weighted_norm(f + g, sp), nf + ng + 1e-10);
    }
  }
}

TEST(WeightedNorm, Errors) {
  FuncRep bad = FuncRep::callable([](double x) { return x < 0.0 ? std::nan("") : 1.0; });
  EXPECT_THROW(weighted_norm(bad, WeightedSpace(2.0, 1.0), 33), NumericalError);
  EXPECT_THROW(weighted_norm(FuncRep::constant(1.0), WeightedSpace(2.0, 1.0), 16), ValidationError);
}
