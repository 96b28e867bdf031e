#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "smoothlab/chebyshev.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/jacobi.hpp"
#include "smoothlab/quadrature.hpp"
#include "smoothlab/translation.hpp"

using namespace smoothlab;

namespace {

constexpr double kPi = std::numbers::pi;

FuncRep Rn(int n) {
  std::vector<double> e(n + 1, 0.0);
  e[n] = 1.0;
  return FuncRep::jacobi(e);
}

FuncRep random_poly(unsigned seed, int degree) { return FuncRep::monomial(oracle::random_poly(seed, degree)); }

const std::vector<double> kGrid{-0.95, -0.7, -0.4, -0.1, 0.0, 0.2, 0.5, 0.8, 0.95};

}  // namespace

TEST(Kernel, AtYEqualOne) {
  for (double x : {-0.9, 0.0, 0.3}) {
    for (double z : {-1.0, 0.2, 0.7}) {
      KernelValue kv = kernel_B(1.0, x, z);
      EXPECT_NEAR(kv.R, x, 1e-15);
      EXPECT_NEAR(kv.B, 1.0 - x * x, 1e-15);
    }
  }
}

TEST(Kernel, AtOrigin) {
  KernelValue kv = kernel_B(0.0, 0.0, 0.0);
  EXPECT_NEAR(kv.R, 0.0, 1e-15);
  EXPECT_NEAR(kv.B, 1.0, 1e-15);
}

TEST(Kernel, RStaysInInterval) {
  for (double y : {-0.999, -0.3, 0.5, 1.0}) {
    for (double x : {-1.0, -0.5, 0.9999999, 1.0}) {
      for (double z : {-1.0, 0.0, 1.0}) {
        KernelValue kv = kernel_B(y, x, z);
        EXPECT_LE(std::abs(kv.R), 1.0);
      }
    }
  }
}

TEST(Translate, EndpointLimitIsFinite) {
  // tau_y(f, x) stays finite as x -> 1 although B/(1-x^2) does not; for
  // f = R_n the value at x = 1 is Q_n(y).
  for (int n : {1, 3, 6}) {
    for (double y : {-0.5, 0.3, 0.9}) {
      double prev = translate_y(Rn(n), y, 1.0 - 1e-3);
      double at = translate_y(Rn(n), y, 1.0);
      EXPECT_TRUE(std::isfinite(at));
      EXPECT_NEAR(at, oracle::Q(n, y), 1e-8);
      EXPECT_NEAR(prev, oracle::R22(n, 1.0 - 1e-3) * oracle::Q(n, y), 1e-9);
    }
  }
  EXPECT_NEAR(translate_y(Rn(2), 0.4, -1.0), oracle::R22(2, -1.0) * oracle::Q(2, 0.4), 1e-8);
}

TEST(Translate, ZeroShiftIsIdentity) {
  FuncRep f = random_poly(21, 9);
  for (double x : kGrid) EXPECT_NEAR(translate_t(f, 0.0, x), f(x), 1e-12);
  FuncRep g = FuncRep::callable([](double x) { return std::exp(x) * std::sin(3 * x); });
  for (double x : kGrid) EXPECT_NEAR(translate_t(g, 0.0, x), g(x), 1e-12);
}

TEST(Translate, ConstantIsFixed) {
  for (double y : {-0.9, -0.2, 0.4, 0.99}) {
    for (double x : kGrid) EXPECT_NEAR(translate_y(FuncRep::constant(1.0), y, x), 1.0, 1e-12);
  }
}

TEST(Translate, FirstJacobiPolynomial) {
  // tau_y(R_1, x) = x * Q_1(y) = x (3y - 2)
  for (double y : {-0.6, 0.0, 0.5, 0.9}) {
    for (double x : kGrid) EXPECT_NEAR(translate_y(Rn(1), y, x), x * (3.0 * y - 2.0), 1e-12);
  }
}

TEST(Translate, ProductFormulaWithYSideFamily) {
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n) {
    for (double x : kGrid) {
      for (double y : kGrid) {
        worst = std::max(worst, std::abs(translate_y(Rn(n), y, x) - oracle::R22(n, x) * oracle::Q(n, y)));
      }
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Translate, TFormMatchesYForm) {
  FuncRep f = random_poly(23, 10);
  TranslationConfig yc;
  yc.form = TranslationForm::YForm;
  for (double t : {0.2, 1.1, 2.5, 3.0}) {
    for (double x : kGrid) {
      double a = translate(f, t, x), b = translate(f, std::cos(t), x, yc);
      EXPECT_NEAR(a, b, 1e-10 * (1.0 + std::abs(a)));
    }
  }
}

TEST(Translate, EvenInT) {
  FuncRep f = random_poly(29, 8);
  FuncRep g = FuncRep::callable([](double x) { return std::pow(std::abs(x), 1.5); });
  for (double t : {0.3, 1.2, 2.7}) {
    for (double x : kGrid) {
      EXPECT_NEAR(translate_t(f, -t, x), translate_t(f, t, x), 1e-7);
      EXPECT_NEAR(translate_t(g, -t, x), translate_t(g, t, x), 1e-7);
    }
  }
}

TEST(Translate, Linear) {
  FuncRep f = random_poly(31, 7), g = random_poly(37, 5);
  FuncRep h = 2.5 * f - g;
  for (double t : {0.4, 2.0}) {
    for (double x : kGrid) {
      EXPECT_NEAR(translate_t(h, t, x), 2.5 * translate_t(f, t, x) - translate_t(g, t, x), 1e-11);
    }
  }
}

TEST(Translate, MultiplierProperty) {
  FuncRep f = random_poly(20240101, 10);
  std::vector<double> a = fourier_jacobi(f, 10);
  for (double y : {-0.7, 0.1, 0.6}) {
    TranslationConfig yc;
    yc.form = TranslationForm::YForm;
    FuncRep tf = FuncRep::callable([&](double x) { return translate(f, y, x, yc); });
    std::vector<double> at = fourier_jacobi(tf, 10);
    for (int n = 0; n <= 10; ++n) EXPECT_NEAR(at[n], a[n] * oracle::Q(n, y), 1e-10);
  }
}

TEST(Translate, SelfAdjoint) {
  FuncRep f = random_poly(41, 9), g = random_poly(43, 8);
  QuadratureRule rule = gauss_rule(RuleKind::GaussJacobi, 24, 2.0, 2.0);
  TranslationConfig yc;
  yc.form = TranslationForm::YForm;
  for (double y : {-0.5, 0.3, 0.8}) {
    double lhs = rule.integrate([&](double x) { return f(x) * translate(g, y, x, yc); });
    double rhs = rule.integrate([&](double x) { return g(x) * translate(f, y, x, yc); });
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Translate, CommutesWithDInXAndY) {
  FuncRep f = random_poly(47, 8);
  FuncRep df = apply_D(f, 2, 2, 1);
  TranslationConfig yc;
  yc.form = TranslationForm::YForm;
  for (double y0 : {-0.4, 0.35}) {
    for (double x0 : {-0.6, 0.1, 0.7}) {
      double lhs = translate(df, y0, x0, yc);
      // D_x: interpolate x -> tau_y(f, x) exactly (degree 8) and differentiate
      std::vector<double> xs = cheb::interior_points(8), vx(9), vy(9);
      for (int i = 0; i < 9; ++i) vx[i] = translate(f, y0, xs[i], yc);
      double dx = cheb::eval(apply_D_cheb(cheb::interp_interior(vx), 2, 2), x0);
      // D_y with the y-side family (0,4)
      for (int i = 0; i < 9; ++i) vy[i] = translate(f, xs[i], x0, yc);
      double dy = cheb::eval(apply_D_cheb(cheb::interp_interior(vy), 0, 4), y0);
      EXPECT_NEAR(lhs, dx, 1e-6 * std::max(1.0, std::abs(lhs)));
      EXPECT_NEAR(lhs, dy, 1e-6 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(Translate, Rejections) {
  EXPECT_THROW(translate_t(FuncRep::constant(1.0), kPi, 0.0), ValidationError);
  EXPECT_THROW(translate_t(FuncRep::constant(1.0), 0.1, 1.5), ValidationError);
  TranslationConfig small;
  small.quad_order = 8;
  EXPECT_THROW(translate_t(FuncRep::constant(1.0), 0.1, 0.0, small), ValidationError);
}

TEST(Difference, ConstantVanishes) {
  for (int r = 1; r <= 3; ++r) {
    DifferenceRequest req{std::vector<double>(r, 0.7)};
    TranslationConfig cfg;
    cfg.quad_order = 20;
    EXPECT_NEAR(difference_r(FuncRep::constant(3.0), req, 0.3, cfg), 0.0, 1e-11);
  }
}

TEST(Difference, SingleStepOnJacobiPolynomials) {
  for (int n : {1, 2, 5, 9}) {
    for (double t : {0.3, 1.4, 2.9}) {
      for (double x : {-0.8, 0.05, 0.66}) {
        double want = oracle::R22(n, x) * (oracle::Q(n, std::cos(t)) - 1.0);
        EXPECT_NEAR(difference_r(Rn(n), DifferenceRequest{{t}}, x), want, 1e-11);
      }
    }
  }
}

TEST(Difference, TwoStepsOnR1) {
  TranslationConfig cfg;
  cfg.quad_order = 24;
  for (auto [t1, t2] : std::vector<std::pair<double, double>>{{0.3, 0.9}, {1.5, 0.2}, {2.2, 2.2}}) {
    for (double x : {-0.7, 0.4}) {
      double want = x * (3.0 * std::cos(t1) - 3.0) * (3.0 * std::cos(t2) - 3.0);
      EXPECT_NEAR(difference_r(Rn(1), DifferenceRequest{{t1, t2}}, x, cfg), want, 1e-10);
    }
  }
}

TEST(Difference, KernelRouteMatchesSpectralRoute) {
  FuncRep f = random_poly(53, 10);
  FuncRep fj = jacobi_expand(f, 10);
  TranslationConfig cfg;
  cfg.quad_order = 20;
  std::vector<double> t{0.5, 1.3, 0.9};
  FuncRep spec = difference_spectral(fj, t);
  for (double x : {-0.9, -0.2, 0.45}) {
    EXPECT_NEAR(difference_r(f, DifferenceRequest{t}, x, cfg), spec(x), 1e-9);
  }
  FuncRep tr = translate_spectral(fj, 1.7);
  for (double x : {-0.9, 0.6}) EXPECT_NEAR(translate_t(f, 1.7, x), tr(x), 1e-11);
}

TEST(Difference, Guards) {
  TranslationConfig cfg;
  EXPECT_THROW(difference_r(FuncRep::constant(1.0), DifferenceRequest{{0.1, 0.1, 0.1, 0.1}}, 0.0, cfg),
               ValidationError);
  EXPECT_THROW(difference_r(FuncRep::constant(1.0), DifferenceRequest{{}}, 0.0, cfg), ValidationError);
  EXPECT_THROW(difference_r(FuncRep::constant(1.0), DifferenceRequest{{4.0}}, 0.0, cfg), ValidationError);
}

TEST(Probe, IdentityAndFirstPolynomial) {
  WeightedSpace sp(2.0, 1.0, Regime::TranslationBound);
  std::vector<FuncRep> trials{Rn(1), Rn(3), random_poly(59, 6)};
  EXPECT_NEAR(operator_norm_probe(0.0, sp, trials), 1.0, 1e-12);
  for (double t : {0.5, 1.0, 2.0, 3.0}) {
    EXPECT_NEAR(operator_norm_probe(t, sp, {Rn(1)}), std::abs(3.0 * std::cos(t) - 2.0), 1e-10);
  }
  EXPECT_THROW(operator_norm_probe(0.5, sp, {}), ValidationError);
  EXPECT_THROW(operator_norm_probe(0.5, WeightedSpace(2.0, 0.0), trials), ValidationError);
}

TEST(Probe, CosineEnvelopeBounded) {
  std::vector<FuncRep> trials;
  for (int k = 0; k <= 12; ++k) trials.push_back(Rn(k));
  trials.push_back(FuncRep::callable([](double x) { return std::pow(std::abs(x), 1.5); }));
  trials.push_back(FuncRep::callable([](double x) { return std::exp(x); }));
  for (double p : {1.0, 2.0, WeightedSpace::kInf}) {
    WeightedSpace sp(p, 1.0, Regime::TranslationBound);
    double lo = 1e300, hi = 0.0;
    for (double t : {0.5, 1.0, 2.0, 3.0}) {
      double c = std::pow(std::cos(t / 2.0), 4);
      double v = operator_norm_probe(t, sp, trials) * c;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    EXPECT_TRUE(std::isfinite(hi));
    EXPECT_LE(hi, 10.0) << "p=" << p;
    EXPECT_GT(lo, 0.0);
  }
}
