#include "smoothlab/trial_family.hpp"

#include <cmath>
#include <random>

#include "smoothlab/errors.hpp"

namespace smoothlab {

namespace {

constexpr int kMaxJacobi = 12;

double parse_real(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    fail_validation("function spec '" + spec + "': '" + text + "' is not a finite number");
  return v;
}

}  // namespace

std::vector<double> random_poly_coeffs(std::uint64_t seed, int degree) {
  if (degree < 0) fail_validation("random_poly_coeffs: negative degree");
  std::mt19937_64 rng(seed);
  std::vector<double> c(degree + 1);
  for (double& v : c) v = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
  return c;
}

std::vector<std::string> trial_family_names() {
  std::vector<std::string> names;
  for (int k = 0; k <= kMaxJacobi; ++k) names.push_back("R" + std::to_string(k));
  names.insert(names.end(), {"abs1.5", "exp", "quartic_weight", "random10"});
  return names;
}

FuncRep trial_function(const std::string& name, std::uint64_t seed) {
  for (int k = 0; k <= kMaxJacobi; ++k) {
    if (name == "R" + std::to_string(k)) {
      std::vector<double> b(k + 1, 0.0);
      b[k] = 1.0;
      return FuncRep::jacobi(std::move(b));
    }
  }
  if (name == "abs1.5") return FuncRep::callable([](double x) { return std::pow(std::abs(x), 1.5); }, name);
  if (name == "exp") return FuncRep::callable([](double x) { return std::exp(x); }, name);
  if (name == "quartic_weight")
    return FuncRep::callable([](double x) { return std::pow(std::max(1.0 - x * x, 0.0), 0.25); }, name);
  if (name == "random10") return FuncRep::monomial(random_poly_coeffs(seed, 10));
  std::string known;
  for (const auto& n : trial_family_names()) known += (known.empty() ? "" : ", ") + n;
  fail_validation("unknown trial function '" + name + "' (known: " + known + ")");
}

std::vector<FuncRep> trial_family(std::uint64_t seed) {
  std::vector<FuncRep> out;
  for (const auto& n : trial_family_names()) out.push_back(trial_function(n, seed));
  return out;
}

FuncRep parse_function(const std::string& spec, std::uint64_t seed) {
  if (spec.rfind("const:", 0) == 0) return FuncRep::constant(parse_real(spec.substr(6), spec));
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<double> c;
    std::string body = spec.substr(5);
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      c.push_back(parse_real(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start), spec));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return FuncRep::monomial(c);
  }
  return trial_function(spec, seed);
}

}  // namespace smoothlab
