#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "commands.hpp"
#include "smoothlab/errors.hpp"
#include "smoothlab/run_config.hpp"
#include "smoothlab/weighted_space.hpp"

using namespace smoothlab;

namespace {

struct Flag {
  std::string key;  // RunConfig key
  std::string help;
};

const std::map<std::string, Flag> kFlags{
    {"f", {"f", "function: trial name (R0..R12, abs1.5, exp, quartic_weight, random10), poly:c0,c1,... or const:c"}},
    {"r", {"r", "order of the difference, 1 <= r <= 3 (lemma-suite: comma list)"}},
    {"delta", {"delta", "delta or comma-separated sweep, 0 <= delta < pi (equivalence: 0 < delta < pi)"}},
    {"n", {"n", "n or range a:b; E_n uses degree <= n-1 (verify-jackson: n <= 64)"}},
    {"p", {"p", "1 <= p <= inf ('inf' accepted)"}},
    {"alpha", {"alpha", "weight exponent of (1-x^2)^alpha, see the regime below"}},
    {"quad-order", {"quad_order", "quadrature order (0: solver default)"}},
    {"t-grid", {"t_grid", "modulus t-grid points per axis"}},
    {"x-resolution", {"x_resolution", "modulus norm grid size / minimum quadrature order"}},
    {"search-degree", {"search_degree", "K-functional polynomial degree, >= 4"}},
    {"grid-size", {"grid_size", "p = inf minimax grid (grid_size + 1 Chebyshev points)"}},
    {"t", {"t", "shift: t with --form t (|t| < pi), y with --form y (|y| <= 1)"}},
    {"form", {"form", "t or y"}},
    {"x", {"x", "comma-separated evaluation points (default: 17-point grid)"}},
    {"kernel-perturbation", {"kernel_perturbation", "added to the translation kernel (fault injection)"}},
    {"seed", {"seed", "seed of the random trial polynomial"}},
    {"out", {"out", "output file (default: stdout)"}},
};

const std::map<std::string, std::vector<std::string>> kCommandFlags{
    {"modulus", {"f", "r", "delta", "p", "alpha", "t-grid", "x-resolution", "seed"}},
    {"kfunc", {"f", "r", "delta", "p", "alpha", "search-degree", "quad-order", "seed"}},
    {"bestapprox", {"f", "n", "p", "alpha", "grid-size", "quad-order", "seed"}},
    {"translate", {"f", "t", "form", "x", "quad-order", "seed"}},
    {"verify-equivalence", {"f", "r", "delta", "p", "alpha", "t-grid", "x-resolution", "search-degree", "seed"}},
    {"verify-jackson", {"f", "r", "n", "p", "alpha", "t-grid", "x-resolution", "grid-size", "quad-order", "seed"}},
    {"lemma-suite", {"seed", "r", "kernel-perturbation"}},
};

const std::map<std::string, std::string> kDescriptions{
    {"modulus", "generalized modulus of smoothness omega_r(f, delta)_{p,alpha}"},
    {"kfunc", "K-functional K_r(f, delta^{2r})_{p,alpha}"},
    {"bestapprox", "best approximation E_n(f)_{p,alpha} by polynomials of degree <= n-1"},
    {"translate", "generalized translation of f at points x"},
    {"verify-equivalence", "ratio table omega / K over a delta sweep (CSV)"},
    {"verify-jackson", "ratio table E_n / omega and omega / (n^{-2r} sum nu^{2r-1} E_nu) (CSV)"},
    {"lemma-suite", "identity checks with max error and tolerance (JSON)"},
};

// Defaults that differ from RunConfig's.
RunConfig defaults_for(const std::string& command) {
  RunConfig c;
  c.command = command;
  if (command == "verify-equivalence") {
    c.delta.clear();
    for (int k = 1; k <= 15; ++k) c.delta.push_back(k / 10.0);
  }
  if (command == "verify-jackson") {
    c.n_min = 2;
    c.n_max = 64;
  }
  if (command == "lemma-suite") c.r = {1, 2};
  return c;
}

std::string regime_footer(const std::string& command) {
  Regime r = command_regime(command);
  std::string s = r == Regime::None ? "(p, alpha) needs an integrable weight: " + regime_table(r) + "."
                                    : "(p, alpha) regime " + regime_name(r) + ": " + regime_table(r) + ".";
  s += "\nSMOOTHNESS_LAB_THREADS caps the worker count.";
  s += "\nExit codes: 0 success, 1 validation error, 2 numerical failure.";
  return s;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized moduli of smoothness, K-functionals and weighted best approximation"};
  app.require_subcommand(1);
  app.footer("SMOOTHNESS_LAB_THREADS caps the worker count. Exit codes: 0 success, 1 validation error, 2 numerical failure.");

  std::map<std::string, std::map<std::string, std::pair<CLI::Option*, std::string>>> given;
  std::map<std::string, std::string> config_path;
  for (const auto& [name, flags] : kCommandFlags) {
    CLI::App* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->footer(regime_footer(name));
    for (const auto& flag : flags) {
      auto& slot = given[name][flag];
      slot.first = sub->add_option("--" + flag, slot.second, kFlags.at(flag).help);
    }
    auto& out_slot = given[name]["out"];
    out_slot.first = sub->add_option("--out", out_slot.second, kFlags.at("out").help);
    sub->add_option("--config", config_path[name], "key = value file; flags given on the command line override it");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    RunConfig cfg = defaults_for(command);
    if (!config_path[command].empty()) {
      cfg = load_run_config(config_path[command], cfg);
      if (cfg.command != command)
        fail_validation("config file command '" + cfg.command + "' does not match '" + command + "'");
    }
    for (const auto& [flag, slot] : given[command]) {
      if (slot.first->count() > 0) cfg.set(kFlags.at(flag).key, slot.second);
    }
    cfg.validate();
    cli::CommandOutput out = cli::run_command(cfg);
    if (cfg.out.empty()) {
      std::cout << out.document;
    } else {
      if (!write_file(cfg.out, out.document)) {
        std::cerr << "error: cannot write " << cfg.out << "\n";
        return 1;
      }
      std::cout << out.summary;
    }
    return out.exit_code;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}
