#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smoothlab/trial_family.hpp"
#include "smoothlab/weighted_space.hpp"

namespace smoothlab {

// Settings of one CLI run. The text form is one "key = value" per line; '#'
// starts a comment. Keys mirror the long CLI flags with '-' replaced by '_'.
struct RunConfig {
  std::string command;
  std::string function = "random10";  // trial-family name, poly:..., const:...
  std::vector<int> r{1};
  std::vector<double> delta{0.5};     // a single value or a sweep
  int n_min = 1;                      // "n = 5" or "n = 2:64"
  int n_max = 1;
  double p = 2.0;
  double alpha = 1.0;
  int quad_order = 0;                 // 0: solver default
  int t_grid = 12;
  int x_resolution = 1025;
  int search_degree = 32;
  int grid_size = 2048;
  double t = 0.5;                     // translate: shift in t (or y with form = y)
  std::string form = "t";
  std::vector<double> x{};            // translate: evaluation points (empty: 17-point grid)
  double kernel_perturbation = 0.0;   // lemma-suite fault injection
  std::string out;
  std::uint64_t seed = kDefaultSeed;

  // Sets one key from its text value; throws ValidationError on unknown keys
  // or malformed values.
  void set(const std::string& key, const std::string& value);
  // (p, alpha) checked against the command's regime; the message names the
  // violated bound.
  void validate() const;
  Regime regime() const;
  WeightedSpace space() const;

  bool operator==(const RunConfig&) const = default;
};

// All keys accepted by RunConfig::set, in serialization order.
const std::vector<std::string>& run_config_keys();
// Regime a command's (p, alpha) must satisfy.
Regime command_regime(const std::string& command);

RunConfig parse_run_config(const std::string& text, RunConfig base = {});
RunConfig load_run_config(const std::string& path, RunConfig base = {});
// Every key, fixed order, doubles with 17 significant digits.
std::string serialize(const RunConfig& cfg);

}  // namespace smoothlab
