#include "smoothlab/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "smoothlab/errors.hpp"

namespace smoothlab {

namespace {

const std::vector<std::string> kCommands{"modulus",           "kfunc",          "bestapprox", "translate",
                                         "verify-equivalence", "verify-jackson", "lemma-suite"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !std::isfinite(d)) fail_validation(key + ": '" + v + "' is not a finite number");
  return d;
}

long long to_int(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long i = 0;
  try {
    i = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) fail_validation(key + ": '" + v + "' is not an integer");
  return i;
}

int to_int32(const std::string& key, const std::string& v, int lo) {
  long long i = to_int(key, v);
  if (i < lo || i > 1000000) fail_validation(key + ": " + v + " out of range");
  return static_cast<int>(i);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& v, F f) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f(v[i]);
  return s;
}

}  // namespace

const std::vector<std::string>& run_config_keys() {
  static const std::vector<std::string> keys{
      "command", "f",           "r",    "delta", "n",    "p",  "alpha",
      "quad_order", "t_grid",   "x_resolution", "search_degree", "grid_size", "t", "form",
      "x",       "kernel_perturbation", "out", "seed"};
  return keys;
}

Regime command_regime(const std::string& command) {
  if (command == "modulus" || command == "kfunc" || command == "verify-equivalence" || command == "verify-jackson")
    return Regime::DirectInverse;
  return Regime::None;
}

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "command") {
    bool known = v.empty();
    for (const auto& c : kCommands) known = known || c == v;
    if (!known) fail_validation("unknown command '" + v + "'");
    command = v;
  } else if (key == "f") {
    if (v.empty()) fail_validation("f: empty function spec");
    function = v;
  } else if (key == "r") {
    r.clear();
    for (const auto& s : split(v, ',')) r.push_back(to_int32(key, s, 0));
  } else if (key == "delta") {
    delta.clear();
    for (const auto& s : split(v, ',')) delta.push_back(to_real(key, s));
  } else if (key == "n") {
    auto parts = split(v, ':');
    if (parts.size() > 2) fail_validation("n: expected 'k' or 'a:b', got '" + v + "'");
    n_min = to_int32(key, parts[0], 1);
    n_max = parts.size() == 2 ? to_int32(key, parts[1], 1) : n_min;
    if (n_max < n_min) fail_validation("n: empty range '" + v + "'");
  } else if (key == "p") {
    p = parse_p(v);
  } else if (key == "alpha") {
    alpha = to_real(key, v);
  } else if (key == "quad_order") {
    quad_order = to_int32(key, v, 0);
  } else if (key == "t_grid") {
    t_grid = to_int32(key, v, 1);
  } else if (key == "x_resolution") {
    x_resolution = to_int32(key, v, 3);
  } else if (key == "search_degree") {
    search_degree = to_int32(key, v, 4);
  } else if (key == "grid_size") {
    grid_size = to_int32(key, v, 8);
  } else if (key == "t") {
    t = to_real(key, v);
  } else if (key == "form") {
    if (v != "t" && v != "y") fail_validation("form: expected 't' or 'y', got '" + v + "'");
    form = v;
  } else if (key == "x") {
    x.clear();
    if (!v.empty())
      for (const auto& s : split(v, ',')) x.push_back(to_real(key, s));
  } else if (key == "kernel_perturbation") {
    kernel_perturbation = to_real(key, v);
  } else if (key == "out") {
    out = v;
  } else if (key == "seed") {
    long long s = to_int(key, v);
    if (s < 0) fail_validation("seed must be nonnegative");
    seed = static_cast<std::uint64_t>(s);
  } else {
    fail_validation("unknown config key '" + key + "'");
  }
}

Regime RunConfig::regime() const { return command_regime(command); }

WeightedSpace RunConfig::space() const { return WeightedSpace(p, alpha, regime()); }

void RunConfig::validate() const {
  (void)space();
  if (r.empty()) fail_validation("r: no value given");
  for (int v : r)
    if (v < 1 || v > 3) fail_validation("r must be 1, 2 or 3 (got " + std::to_string(v) + ")");
  if (delta.empty()) fail_validation("delta: no value given");
}

RunConfig parse_run_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail_validation("config line " + std::to_string(lineno) + ": expected key = value");
    base.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  base.validate();
  return base;
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) fail_validation("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), std::move(base));
}

std::string serialize(const RunConfig& c) {
  std::string s;
  auto line = [&](const std::string& k, const std::string& v) { s += k + " = " + v + "\n"; };
  line("command", c.command);
  line("f", c.function);
  line("r", join(c.r, [](int v) { return std::to_string(v); }));
  line("delta", join(c.delta, fmt));
  line("n", c.n_min == c.n_max ? std::to_string(c.n_min) : std::to_string(c.n_min) + ":" + std::to_string(c.n_max));
  line("p", c.p == WeightedSpace::kInf ? "inf" : fmt(c.p));
  line("alpha", fmt(c.alpha));
  line("quad_order", std::to_string(c.quad_order));
  line("t_grid", std::to_string(c.t_grid));
  line("x_resolution", std::to_string(c.x_resolution));
  line("search_degree", std::to_string(c.search_degree));
  line("grid_size", std::to_string(c.grid_size));
  line("t", fmt(c.t));
  line("form", c.form);
  line("x", join(c.x, fmt));
  line("kernel_perturbation", fmt(c.kernel_perturbation));
  line("out", c.out);
  line("seed", std::to_string(c.seed));
  return s;
}

}  // namespace smoothlab
