#include <gtest/gtest.h>

#include "smoothlab/errors.hpp"
#include "smoothlab/weighted_space.hpp"

using namespace smoothlab;

namespace {
constexpr double kInf = WeightedSpace::kInf;
}

TEST(Regime, DirectInverseTable) {
  // p = 1: 1/2 < alpha <= 1
  EXPECT_FALSE(WeightedSpace(1.0, 0.5).satisfies(Regime::DirectInverse));
  EXPECT_TRUE(WeightedSpace(1.0, 0.5000001).satisfies(Regime::DirectInverse));
  EXPECT_TRUE(WeightedSpace(1.0, 1.0).satisfies(Regime::DirectInverse));
  EXPECT_FALSE(WeightedSpace(1.0, 1.0000001).satisfies(Regime::DirectInverse));
  // p = 2: 3/4 < alpha < 5/4
  EXPECT_FALSE(WeightedSpace(2.0, 0.75).satisfies(Regime::DirectInverse));
  EXPECT_TRUE(WeightedSpace(2.0, 1.0).satisfies(Regime::DirectInverse));
  EXPECT_FALSE(WeightedSpace(2.0, 1.25).satisfies(Regime::DirectInverse));
  // p = inf: 1 <= alpha < 3/2
  EXPECT_TRUE(WeightedSpace(kInf, 1.0).satisfies(Regime::DirectInverse));
  EXPECT_FALSE(WeightedSpace(kInf, 1.5).satisfies(Regime::DirectInverse));
  EXPECT_FALSE(WeightedSpace(kInf, 0.99).satisfies(Regime::DirectInverse));
}

TEST(Regime, OtherTables) {
  EXPECT_TRUE(WeightedSpace(1.0, 2.0).satisfies(Regime::HBound));
  EXPECT_FALSE(WeightedSpace(1.0, 2.0).satisfies(Regime::HDerivativeBound));
  EXPECT_FALSE(regime_range(Regime::HBound, 1.0).contains(-1.0));
  EXPECT_TRUE(WeightedSpace(kInf, 0.0).satisfies(Regime::HBound));
  EXPECT_FALSE(WeightedSpace(kInf, 3.0).satisfies(Regime::HBound));
  EXPECT_TRUE(WeightedSpace(3.0, 2.6).satisfies(Regime::HBound));
  EXPECT_FALSE(WeightedSpace(3.0, 8.0 / 3.0).satisfies(Regime::HBound));
  EXPECT_TRUE(WeightedSpace(1.0, 2.0).satisfies(Regime::ED));
  EXPECT_FALSE(WeightedSpace(1.0, -0.5).satisfies(Regime::ED));
  EXPECT_TRUE(WeightedSpace(2.0, 2.2).satisfies(Regime::ED));
  EXPECT_FALSE(WeightedSpace(2.0, 2.25).satisfies(Regime::ED));
  EXPECT_FALSE(WeightedSpace(kInf, 2.5).satisfies(Regime::ED));
  EXPECT_TRUE(WeightedSpace(2.0, -0.4).satisfies(Regime::BernsteinMarkov));
  EXPECT_FALSE(regime_range(Regime::BernsteinMarkov, kInf).contains(-0.1));
}

TEST(Regime, ConstructionRejectsAndNamesBound) {
  try {
    WeightedSpace sp(2.0, 2.0, Regime::DirectInverse);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("DirectInverse"), std::string::npos);
    EXPECT_NE(msg.find("alpha < 1.25"), std::string::npos);
  }
  EXPECT_THROW(WeightedSpace(0.5, 1.0), ValidationError);
  EXPECT_THROW(WeightedSpace(2.0, -0.6), ValidationError);  // weight not integrable
}

TEST(Regime, ParseP) {
  EXPECT_EQ(parse_p("inf"), kInf);
  EXPECT_EQ(parse_p("2.5"), 2.5);
  EXPECT_THROW(parse_p("0.9"), ValidationError);
  EXPECT_THROW(parse_p("2x"), ValidationError);
}
