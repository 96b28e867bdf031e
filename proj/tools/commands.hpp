#pragma once

#include <string>

#include "smoothlab/run_config.hpp"

namespace smoothlab::cli {

struct CommandOutput {
  std::string document;  // CSV or JSON
  std::string summary;   // short human-readable text
  int exit_code = 0;
};

// Runs cfg.command on a validated config.
CommandOutput run_command(const RunConfig& cfg);

}  // namespace smoothlab::cli
