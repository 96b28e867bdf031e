#include <gtest/gtest.h>

#include "smoothlab/errors.hpp"
#include "smoothlab/run_config.hpp"

using namespace smoothlab;

TEST(RunConfig, ParseText) {
  RunConfig c = parse_run_config(
      "# sweep\n"
      "command = verify-jackson\n"
      "f = poly:0,0,1   # x^2\n"
      "r = 2\n"
      "n = 2:16\n"
      "p = inf\n"
      "alpha = 1\n"
      "\n"
      "delta = 0.1, 0.2,0.4\n");
  EXPECT_EQ(c.command, "verify-jackson");
  EXPECT_EQ(c.function, "poly:0,0,1");
  EXPECT_EQ(c.r, std::vector<int>{2});
  EXPECT_EQ(c.n_min, 2);
  EXPECT_EQ(c.n_max, 16);
  EXPECT_EQ(c.p, WeightedSpace::kInf);
  EXPECT_EQ(c.delta, (std::vector<double>{0.1, 0.2, 0.4}));
}

TEST(RunConfig, RoundTrip) {
  RunConfig c;
  c.command = "kfunc";
  c.function = "abs1.5";
  c.r = {1, 3};
  c.delta = {0.1, 1.0 / 3.0, 1.4999999999999998};
  c.n_min = 3;
  c.n_max = 9;
  c.p = 1.7;
  c.alpha = 0.9;
  c.quad_order = 300;
  c.t = -2.25;
  c.form = "y";
  c.x = {-0.3, 0.7};
  c.kernel_perturbation = 1e-3;
  c.out = "out.csv";
  c.seed = 12345678901234ull;
  std::string text = serialize(c);
  RunConfig back = parse_run_config(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(serialize(back), text);
  RunConfig d;
  EXPECT_EQ(parse_run_config(serialize(d)), d);
}

TEST(RunConfig, RegimeViolationNamesBound) {
  try {
    parse_run_config("command = modulus\np = 2\nalpha = 2\n");
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("DirectInverse"), std::string::npos) << msg;
    EXPECT_NE(msg.find("alpha < 1.25"), std::string::npos) << msg;
  }
  // bestapprox only needs an integrable weight
  EXPECT_NO_THROW(parse_run_config("command = bestapprox\np = 2\nalpha = 2\n"));
  EXPECT_THROW(parse_run_config("command = bestapprox\np = 2\nalpha = -0.6\n"), ValidationError);
}

TEST(RunConfig, Rejections) {
  for (const char* bad : {"colour = red\n", "r = 0\n", "r = 4\n", "n = 5:2\n", "n = 0\n", "p = 0.5\n", "alpha = x\n",
                          "form = z\n", "command = plot\n", "delta\n", "seed = -1\n", "t_grid = 1.5\n"})
    EXPECT_THROW(parse_run_config(bad), ValidationError) << bad;
}

TEST(RunConfig, BaseIsOverridden) {
  RunConfig base;
  base.command = "bestapprox";
  base.n_min = base.n_max = 4;
  RunConfig c = parse_run_config("n = 6\n", base);
  EXPECT_EQ(c.command, "bestapprox");
  EXPECT_EQ(c.n_min, 6);
}
