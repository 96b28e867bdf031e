#include "smoothlab/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "smoothlab/errors.hpp"
#include "smoothlab/parallel.hpp"

namespace smoothlab {

namespace {

// Relative level below which a quantity counts as zero.
constexpr double kZeroLevel = 1e-13;

void check_r(int r) {
  if (r < 1 || r > 3) fail_validation("r must be 1, 2 or 3 (got " + std::to_string(r) + ")");
}

}  // namespace

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool RatioRow::any_degenerate() const {
  for (bool d : degenerate)
    if (d) return true;
  return false;
}

void add_ratio(RatioRow& row, double num, double den, double zero_level) {
  const bool degenerate = std::abs(num) <= zero_level || std::abs(den) <= zero_level;
  row.degenerate.push_back(degenerate);
  if (degenerate && std::abs(den) <= zero_level)
    row.ratios.push_back(std::abs(num) <= zero_level ? std::numeric_limits<double>::quiet_NaN()
                                                     : std::numeric_limits<double>::infinity());
  else
    row.ratios.push_back(num / den);
}

void RatioTable::summarize() {
  summary.assign(ratio_names.size(), RatioSummary{});
  for (std::size_t k = 0; k < ratio_names.size(); ++k) {
    RatioSummary& s = summary[k];
    s.min_ratio = std::numeric_limits<double>::infinity();
    s.max_ratio = -std::numeric_limits<double>::infinity();
    bool bad = false;
    for (const RatioRow& row : rows) {
      if (row.degenerate[k]) {
        ++s.excluded;
        continue;
      }
      const double v = row.ratios[k];
      ++s.included;
      if (!std::isfinite(v) || v <= 0.0) bad = true;
      s.min_ratio = std::min(s.min_ratio, v);
      s.max_ratio = std::max(s.max_ratio, v);
    }
    if (s.included == 0) {
      s.min_ratio = s.max_ratio = std::numeric_limits<double>::quiet_NaN();
      s.spread = std::numeric_limits<double>::quiet_NaN();
    } else {
      s.spread = bad ? std::numeric_limits<double>::infinity() : s.max_ratio / s.min_ratio;
    }
  }
}

std::string RatioTable::to_csv() const {
  std::string out;
  for (const auto& p : param_names) out += p + ",";
  out += lhs_name + "," + rhs_name;
  for (const auto& r : ratio_names) out += "," + r;
  out += ",degenerate\n";
  for (const RatioRow& row : rows) {
    for (double p : row.params) out += fmt17(p) + ",";
    out += fmt17(row.lhs) + "," + fmt17(row.rhs);
    for (double v : row.ratios) out += "," + fmt17(v);
    out += row.any_degenerate() ? ",1\n" : ",0\n";
  }
  return out;
}

std::string RatioTable::summary_text() const {
  std::ostringstream os;
  os << label << "\n";
  for (std::size_t k = 0; k < summary.size(); ++k) {
    const RatioSummary& s = summary[k];
    os << "  " << ratio_names[k] << ": min " << fmt17(s.min_ratio) << " max " << fmt17(s.max_ratio) << " spread "
       << fmt17(s.spread) << " (" << s.included << " rows, " << s.excluded << " degenerate)\n";
  }
  return os.str();
}

std::vector<double> default_deltas() {
  std::vector<double> d;
  for (int k = 1; k <= 15; ++k) d.push_back(k / 10.0);
  return d;
}

RatioTable verify_equivalence(const FuncRep& f, int r, const WeightedSpace& space, const std::vector<double>& deltas,
                              const EquivalenceOptions& opt) {
  space.require(Regime::DirectInverse);
  check_r(r);
  if (deltas.empty()) fail_validation("verify_equivalence: empty delta list");
  for (double d : deltas)
    if (!(d > 0.0 && d < std::numbers::pi)) fail_validation("verify_equivalence: every delta must lie in (0, pi)");

  ModulusEngine engine(f, space, opt.modulus);
  const double zero = kZeroLevel * std::max(engine.f_norm(), 1e-300);

  RatioTable t;
  t.label = "equivalence r=" + std::to_string(r) + " " + space.describe() + " f=" + f.label();
  t.param_names = {"delta"};
  t.lhs_name = "omega";
  t.rhs_name = "K";
  t.ratio_names = {"ratio_lower", "ratio_upper"};
  t.rows.resize(deltas.size());
  parallel_for(deltas.size(), [&](std::size_t i) {
    const double d = deltas[i];
    const double omega = engine.compute(r, d).refined_value;
    const double K = k_functional(f, r, d, space, opt.kfunctional).value;
    const double c = std::pow(std::cos(d / 2.0), 4);
    RatioRow& row = t.rows[i];
    row.params = {d};
    row.lhs = omega;
    row.rhs = K;
    add_ratio(row, omega, std::pow(c, r * (r - 1)) * K, zero);
    add_ratio(row, omega * std::pow(c, r), K, zero);
  });
  t.summarize();
  return t;
}

RatioTable verify_jackson(const FuncRep& f, int r, const WeightedSpace& space, int n_max, const JacksonOptions& opt) {
  space.require(Regime::DirectInverse);
  check_r(r);
  if (n_max > 64) fail_validation("verify_jackson: n_max must be at most 64");
  if (opt.n_min < 1 || opt.n_min > n_max) fail_validation("verify_jackson: need 1 <= n_min <= n_max");

  ModulusEngine engine(f, space, opt.modulus);
  const double zero = kZeroLevel * std::max(engine.f_norm(), 1e-300);

  std::vector<double> E(n_max + 1, 0.0);
  parallel_for(n_max, [&](std::size_t i) { E[i + 1] = best_approx(f, static_cast<int>(i) + 1, space, opt.approx).value; });

  RatioTable t;
  t.label = "jackson r=" + std::to_string(r) + " " + space.describe() + " f=" + f.label();
  t.param_names = {"n", "E_n"};
  t.lhs_name = "omega";
  t.rhs_name = "sum_bound";
  t.ratio_names = {"ratio_left", "ratio_right"};
  const int rows = n_max - opt.n_min + 1;
  t.rows.resize(rows);
  parallel_for(rows, [&](std::size_t i) {
    const int n = opt.n_min + static_cast<int>(i);
    double sum = 0.0;
    for (int nu = 1; nu <= n; ++nu) sum += std::pow(nu, 2 * r - 1) * E[nu];
    const double bound = sum / std::pow(n, 2 * r);
    const double omega = engine.compute(r, 1.0 / n).refined_value;
    RatioRow& row = t.rows[i];
    row.params = {static_cast<double>(n), E[n]};
    row.lhs = omega;
    row.rhs = bound;
    add_ratio(row, E[n], omega, zero);
    add_ratio(row, omega, bound, zero);
  });
  t.summarize();
  return t;
}

}  // namespace smoothlab
