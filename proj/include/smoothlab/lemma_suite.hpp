#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smoothlab/trial_family.hpp"

namespace smoothlab {

struct LemmaSuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> r_values{1, 2};  // each in {1, 2, 3}
  // Added to the translation kernel everywhere in the suite; for fault
  // injection only.
  double kernel_perturbation = 0.0;
};

struct LemmaCheck {
  std::string lemma_id;
  double max_error = 0.0;  // NaN if the check threw
  double tolerance = 0.0;
  bool pass = false;
  std::string note;  // exception text, empty otherwise
};

struct LemmaReport {
  std::uint64_t seed = 0;
  double kernel_perturbation = 0.0;
  std::vector<LemmaCheck> checks;

  bool all_pass() const;
  const LemmaCheck* find(const std::string& id) const;
  // Deterministic JSON: {"seed", "kernel_perturbation", "all_pass", "checks": [...]}.
  std::string to_json() const;
};

// Runs every identity check; failures are report entries, not exceptions.
// Throws ValidationError for r outside {1, 2, 3}.
LemmaReport run_lemma_suite(const LemmaSuiteOptions& opt = {});

}  // namespace smoothlab
