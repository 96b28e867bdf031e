#pragma once

#include <limits>
#include <string>

namespace smoothlab {

// Admissible (p, alpha) ranges of the individual results.
//   TranslationBound  norm bound of the translation operator
//   HBound            boundedness of H
//   HDerivativeBound  boundedness of dH/dx
//   DirectInverse     modulus bounds, the equivalence and Jackson theorems
//   BernsteinMarkov   Bernstein-Markov inequalities
//   ED                E_n versus ||D^r f||
enum class Regime { None, TranslationBound, HBound, HDerivativeBound, DirectInverse, BernsteinMarkov, ED };

std::string regime_name(Regime regime);
Regime regime_from_name(const std::string& name);
// Human-readable table, e.g. "p=1: 1/2 < alpha <= 1; 1<p<inf: ...".
std::string regime_table(Regime regime);

struct AlphaRange {
  double lo = -std::numeric_limits<double>::infinity();
  bool lo_inclusive = false;
  double hi = std::numeric_limits<double>::infinity();
  bool hi_inclusive = false;
  bool contains(double alpha) const;
  std::string describe() const;
};

AlphaRange regime_range(Regime regime, double p);

struct WeightedSpace {
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  double p = 2.0;
  double alpha = 1.0;
  Regime regime = Regime::None;

  WeightedSpace() = default;
  // Validates p >= 1, integrability of the weight, and the regime table.
  WeightedSpace(double p, double alpha, Regime regime = Regime::None);

  bool p_inf() const { return p == kInf; }
  bool satisfies(Regime r) const;
  // Throws ValidationError naming the violated bound.
  void require(Regime r) const;
  std::string describe() const;
};

// Parses "inf", "infinity" or a real >= 1.
double parse_p(const std::string& text);
std::string format_p(double p);

}  // namespace smoothlab
