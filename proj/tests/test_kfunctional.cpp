#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"
#include "smoothlab/kfunctional.hpp"
#include "smoothlab/lp.hpp"
#include "smoothlab/norms.hpp"

using namespace smoothlab;

namespace {

// int R_n^2 (1 - x^2)^2 dx
double h22(int n) { return 128.0 / ((2.0 * n + 5) * (n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0)); }

FuncRep R22_callable(int n) {
  return FuncRep::callable([n](double x) { return oracle::R22(n, x); });
}

// p = 2, alpha = 1: D is diagonal in R_n, so for f = sum b_n R_n the
// minimizer over g = sum g_n R_n lies on g_n = b_n / (1 + mu lambda_n^{2r}).
double k22_oracle(const std::vector<double>& b, int r, double s) {
  auto J = [&](double lmu) {
    double mu = std::pow(10.0, lmu), fit = 0.0, sm = 0.0;
    for (std::size_t n = 0; n < b.size(); ++n) {
      double lam = std::pow(n * (n + 5.0), r);
      double g = b[n] / (1.0 + mu * lam * lam);
      fit += (b[n] - g) * (b[n] - g) * h22(n);
      sm += lam * lam * g * g * h22(n);
    }
    return std::sqrt(fit) + s * std::sqrt(sm);
  };
  double best = J(-60.0), arg = -60.0;
  for (int k = 0; k <= 12000; ++k) {
    double l = -60.0 + 0.01 * k;
    double v = J(l);
    if (v < best) best = v, arg = l;
  }
  double a = arg - 0.01, c = arg + 0.01;
  for (int it = 0; it < 200; ++it) {
    double m1 = a + (c - a) / 3, m2 = c - (c - a) / 3;
    if (J(m1) < J(m2)) c = m2; else a = m1;
  }
  double tail = 0.0;
  for (std::size_t n = 0; n < b.size(); ++n) tail += b[n] * b[n] * h22(n);
  return std::min({best, J(a), std::sqrt(tail - b[0] * b[0] * h22(0))});
}

}  // namespace

TEST(KFunctional, SingleRClosedForm) {
  WeightedSpace sp(2.0, 1.0);
  for (int n : {1, 3}) {
    for (int r : {1, 2}) {
      for (double delta : {0.05, 0.2, 0.6}) {
        double s = std::pow(delta, 2 * r);
        double want = std::sqrt(h22(n)) * std::min(1.0, s * std::pow(n * (n + 5.0), r));
        KFunctionalResult k = k_functional(R22_callable(n), r, delta, sp);
        EXPECT_NEAR(k.value, want, 1e-8 * want) << n << " " << r << " " << delta;
      }
    }
  }
}

TEST(KFunctional, SeriesMatchesPathOracle) {
  WeightedSpace sp(2.0, 1.0);
  std::vector<double> b = {0.3, 1.0, -0.5, 0.25, 0.2, -0.1, 0.05};
  FuncRep f = FuncRep::jacobi(b);
  for (int r : {1, 2}) {
    for (double delta : {0.1, 0.3, 0.8}) {
      double want = k22_oracle(b, r, std::pow(delta, 2 * r));
      KFunctionalResult k = k_functional(f, r, delta, sp);
      EXPECT_NEAR(k.value, want, 1e-7 * want) << r << " " << delta;
    }
  }
}

TEST(KFunctional, FirstDegreeRayBound) {
  FuncRep x = FuncRep::monomial({0.0, 1.0});
  for (auto [p, alpha] : {std::pair{2.0, 1.0}, std::pair{1.0, 0.75}, std::pair{3.0, 1.0},
                          std::pair{WeightedSpace::kInf, 1.2}}) {
    WeightedSpace sp(p, alpha);
    double nx = weighted_norm(x, sp, 512);
    for (double delta : {0.1, 0.3, 0.6}) {
      KFunctionalResult k = k_functional(x, 1, delta, sp);
      EXPECT_LE(k.value, std::min(1.0, 6.0 * delta * delta) * nx * (1.0 + 1e-9)) << p << " " << delta;
      EXPECT_NEAR(k.value, k.fit_term + k.smooth_term, 1e-15);
    }
  }
}

TEST(KFunctional, LinearProgramIsTight) {
  WeightedSpace sp(WeightedSpace::kInf, 1.0);
  FuncRep f = FuncRep::callable([](double x) { return std::pow(std::abs(x), 1.5); });
  for (int r : {1, 2}) {
    KFunctionalResult k = k_functional(f, r, 0.3, sp);
    EXPECT_EQ(k.solver, "lp");
    EXPECT_NEAR(k.value, k.lower_bound, 1e-9 * k.value);
    EXPECT_LE(k.value, k.coarse_value * (1 + 1e-9));
  }
}

TEST(KFunctional, IrlsMatchesLinearProgramAtPOne) {
  // p = 1 written as an LP on the same discretization, solved independently.
  WeightedSpace sp(1.0, 0.75);
  KFunctionalOptions opt;
  opt.search_degree = 6;
  opt.resolution = 48;
  opt.certify = false;
  FuncRep f = FuncRep::callable([](double x) { return std::exp(x) + std::abs(x); });
  const int r = 1;
  const double delta = 0.4, s = delta * delta;
  KFunctionalResult k = k_functional(f, r, delta, sp, opt);

  NormGrid g = make_norm_grid(sp, opt.resolution);
  const int M = g.size(), n = opt.search_degree + 1;
  // columns: c+ (n), c- (n), e+ (M), e- (M), d+ (M), d- (M)
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * M, 2 * n + 4 * M);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * M), c = Eigen::VectorXd::Zero(2 * n + 4 * M);
  for (int i = 0; i < M; ++i) {
    const double x = g.x[i];
    for (int j = 0; j < n; ++j) {
      // T_j and D T_j, with D = (1-x^2) d^2 - 6 x d
      double th = std::acos(x), T = std::cos(j * th);
      double d1 = j * std::sin(j * th) / std::sin(th);
      double d2 = (x * d1 - j * j * T) / (1.0 - x * x);
      double DT = (1.0 - x * x) * d2 - 6.0 * x * d1;
      A(i, j) = T;
      A(i, n + j) = -T;
      A(M + i, j) = DT;
      A(M + i, n + j) = -DT;
    }
    A(i, 2 * n + i) = 1.0;
    A(i, 2 * n + M + i) = -1.0;
    A(M + i, 2 * n + 2 * M + i) = 1.0;
    A(M + i, 2 * n + 3 * M + i) = -1.0;
    b(i) = f(x);
    c(2 * n + i) = c(2 * n + M + i) = g.quad[i];
    c(2 * n + 2 * M + i) = c(2 * n + 3 * M + i) = s * g.quad[i];
  }
  LPResult lp = solve_lp(A, b, c);
  ASSERT_EQ(lp.status, LPStatus::Optimal);
  EXPECT_EQ(k.solver, "irls");
  EXPECT_NEAR(k.value, lp.objective, 1e-6 * lp.objective);
}

TEST(KFunctional, PolynomialBounds) {
  FuncRep f = FuncRep::monomial(oracle::random_poly(20240101, 10));
  for (auto [p, alpha] : {std::pair{2.0, 1.0}, std::pair{1.0, 0.75}, std::pair{WeightedSpace::kInf, 1.2}}) {
    WeightedSpace sp(p, alpha);
    EXPECT_NEAR(k_functional(f, 1, 0.0, sp).value, 0.0, 1e-9) << p;
    for (int r : {1, 2}) {
      const double delta = 0.2;
      double feasible = std::pow(delta, 2 * r) * weighted_norm(apply_D(f, 2.0, 2.0, r), sp, 512);
      double fn = weighted_norm(f - FuncRep::constant(0.0), sp, 512);
      KFunctionalResult k = k_functional(f, r, delta, sp);
      EXPECT_LE(k.value, feasible * (1 + 1e-6) + 1e-12) << p << " " << r;
      EXPECT_LE(k.value, fn * (1 + 1e-6)) << p << " " << r;
      EXPECT_GE(k.value, 0.0);
    }
  }
}

TEST(KFunctional, NondecreasingInDelta) {
  FuncRep f = FuncRep::callable([](double x) { return std::pow(std::abs(x), 1.5); });
  for (auto [p, alpha] : {std::pair{2.0, 1.0}, std::pair{WeightedSpace::kInf, 1.0}}) {
    WeightedSpace sp(p, alpha);
    double prev = 0.0;
    for (double delta : {0.05, 0.1, 0.2, 0.4, 0.8}) {
      double v = k_functional(f, 1, delta, sp).value;
      EXPECT_GE(v, prev * (1 - 1e-9)) << p << " " << delta;
      prev = v;
    }
  }
}

TEST(KFunctional, Errors) {
  WeightedSpace sp(2.0, 1.0);
  FuncRep f = FuncRep::constant(1.0);
  KFunctionalOptions small;
  small.search_degree = 3;
  EXPECT_THROW(k_functional(f, 1, 0.1, sp, small), ValidationError);
  EXPECT_THROW(k_functional(f, 0, 0.1, sp), ValidationError);
  EXPECT_THROW(k_functional(f, 1, -0.1, sp), ValidationError);
}
