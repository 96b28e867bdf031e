#pragma once

#include <string>
#include <vector>

#include "smoothlab/approx.hpp"
#include "smoothlab/funcrep.hpp"
#include "smoothlab/kfunctional.hpp"
#include "smoothlab/smoothness.hpp"
#include "smoothlab/weighted_space.hpp"

namespace smoothlab {

// %.17g, with "nan", "inf" and "-inf" spelled out.
std::string fmt17(double v);

struct RatioRow {
  std::vector<double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<double> ratios;
  // One flag per ratio: numerator or denominator at rounding level. Such
  // entries are printed but left out of the summary.
  std::vector<bool> degenerate;
  bool any_degenerate() const;
};

struct RatioSummary {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread = 0.0;  // max / min; infinite if some included ratio is 0 or not finite
  int included = 0;
  int excluded = 0;
};

struct RatioTable {
  std::string label;
  std::vector<std::string> param_names;
  std::string lhs_name = "lhs";
  std::string rhs_name = "rhs";
  std::vector<std::string> ratio_names;
  std::vector<RatioRow> rows;
  std::vector<RatioSummary> summary;  // one per ratio column

  // Fills `summary` from the rows.
  void summarize();
  // Header plus one line per row: params..., lhs, rhs, ratios..., degenerate.
  // 17 significant digits, ',' delimiter, LF line ends.
  std::string to_csv() const;
  std::string summary_text() const;
};

// Ratio entry num / den and its degeneracy flag with respect to `zero_level`.
void add_ratio(RatioRow& row, double num, double den, double zero_level);

struct EquivalenceOptions {
  ModulusOptions modulus{};
  KFunctionalOptions kfunctional{};
};

// Rows (delta, omega_r(f, delta), K_r(f, delta^{2r})) with the normalized
// ratios omega / (c^{r(r-1)} K) (bounded below) and omega c^r / K (bounded
// above), c = cos^4(delta / 2). Requires the DirectInverse regime.
RatioTable verify_equivalence(const FuncRep& f, int r, const WeightedSpace& space, const std::vector<double>& deltas,
                              const EquivalenceOptions& opt = {});

struct JacksonOptions {
  int n_min = 2;
  ModulusOptions modulus{};
  ApproxOptions approx{};
};

// Rows (n, E_n; omega_r(f, 1/n), n^{-2r} sum_{nu<=n} nu^{2r-1} E_nu) with the
// left ratio E_n / omega and the right ratio omega / (n^{-2r} sum).
// Requires the DirectInverse regime and n_max <= 64.
RatioTable verify_jackson(const FuncRep& f, int r, const WeightedSpace& space, int n_max,
                          const JacksonOptions& opt = {});

// The default delta sweep 0.1, 0.2, ..., 1.5.
std::vector<double> default_deltas();

}  // namespace smoothlab
