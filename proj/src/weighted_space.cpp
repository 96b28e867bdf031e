#include "smoothlab/weighted_space.hpp"

#include <cmath>
#include <sstream>

#include "smoothlab/errors.hpp"

namespace smoothlab {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

AlphaRange range(double lo, bool lo_inc, double hi, bool hi_inc) {
  AlphaRange r;
  r.lo = lo;
  r.lo_inclusive = lo_inc;
  r.hi = hi;
  r.hi_inclusive = hi_inc;
  return r;
}

constexpr double kInf = WeightedSpace::kInf;

}  // namespace

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::None: return "none";
    case Regime::TranslationBound: return "TranslationBound";
    case Regime::HBound: return "HBound";
    case Regime::HDerivativeBound: return "HDerivativeBound";
    case Regime::DirectInverse: return "DirectInverse";
    case Regime::BernsteinMarkov: return "BernsteinMarkov";
    case Regime::ED: return "ED";
  }
  return "none";
}

Regime regime_from_name(const std::string& name) {
  for (Regime r : {Regime::None, Regime::TranslationBound, Regime::HBound, Regime::HDerivativeBound,
                   Regime::DirectInverse, Regime::BernsteinMarkov, Regime::ED}) {
    if (regime_name(r) == name) return r;
  }
  fail_validation("unknown regime '" + name + "'");
}

bool AlphaRange::contains(double alpha) const {
  bool above = lo_inclusive ? alpha >= lo : alpha > lo;
  bool below = hi_inclusive ? alpha <= hi : alpha < hi;
  return above && below;
}

std::string AlphaRange::describe() const {
  std::string s;
  if (std::isfinite(lo)) s += num(lo) + (lo_inclusive ? " <= " : " < ");
  s += "alpha";
  if (std::isfinite(hi)) s += (hi_inclusive ? " <= " : " < ") + num(hi);
  return s;
}

AlphaRange regime_range(Regime regime, double p) {
  const bool one = p == 1.0;
  const bool inf = p == kInf;
  switch (regime) {
    case Regime::None:
      if (inf) return range(0.0, true, kInf, false);
      return range(-1.0 / p, false, kInf, false);
    case Regime::TranslationBound:
    case Regime::DirectInverse:
      if (one) return range(0.5, false, 1.0, true);
      if (inf) return range(1.0, true, 1.5, false);
      return range(1.0 - 1.0 / (2.0 * p), false, 1.5 - 1.0 / (2.0 * p), false);
    case Regime::HBound:
      if (one) return range(-1.0, false, 2.0, true);
      if (inf) return range(0.0, true, 3.0, false);
      return range(-1.0 / p, false, 3.0 - 1.0 / p, false);
    case Regime::HDerivativeBound:
      if (inf) return range(0.0, true, 3.0, false);
      return range(-1.0 / p, false, 3.0 - 1.0 / p, false);
    case Regime::BernsteinMarkov:
      if (inf) return range(0.0, true, kInf, false);
      return range(-1.0 / p, false, kInf, false);
    case Regime::ED:
      if (one) return range(-0.5, false, 2.0, true);
      if (inf) return range(0.0, true, 2.5, false);
      return range(-1.0 / (2.0 * p), false, 2.5 - 1.0 / (2.0 * p), false);
  }
  return range(-kInf, false, kInf, false);
}

std::string regime_table(Regime regime) {
  auto row = [&](const std::string& label, double p) {
    AlphaRange r = regime_range(regime, p);
    std::string d = r.describe();
    return label + ": " + d;
  };
  std::string out;
  switch (regime) {
    case Regime::None:
      return "1<=p<inf: alpha > -1/p; p=inf: alpha >= 0";
    case Regime::TranslationBound:
    case Regime::DirectInverse:
      out = row("p=1", 1.0) + "; 1<p<inf: 1-1/(2p) < alpha < 3/2-1/(2p); " + row("p=inf", kInf);
      return out;
    case Regime::HBound:
      return row("p=1", 1.0) + "; 1<p<inf: -1/p < alpha < 3-1/p; " + row("p=inf", kInf);
    case Regime::HDerivativeBound:
      return "1<=p<inf: -1/p < alpha < 3-1/p; " + row("p=inf", kInf);
    case Regime::BernsteinMarkov:
      return "1<=p<inf: alpha > -1/p; p=inf: alpha >= 0";
    case Regime::ED:
      return row("p=1", 1.0) + "; 1<p<inf: -1/(2p) < alpha < 5/2-1/(2p); " + row("p=inf", kInf);
  }
  return out;
}

WeightedSpace::WeightedSpace(double p_, double alpha_, Regime regime_)
    : p(p_), alpha(alpha_), regime(regime_) {
  if (std::isnan(p) || p < 1.0) fail_validation("p must be in [1, inf], got " + num(p));
  if (!std::isfinite(alpha)) fail_validation("alpha must be finite");
  require(Regime::None);
  if (regime != Regime::None) require(regime);
}

bool WeightedSpace::satisfies(Regime r) const { return regime_range(r, p).contains(alpha); }

void WeightedSpace::require(Regime r) const {
  AlphaRange range = regime_range(r, p);
  if (range.contains(alpha)) return;
  fail_validation("(p, alpha) = (" + format_p(p) + ", " + num(alpha) + ") violates regime " +
                  regime_name(r) + ": need " + range.describe() + " at p = " + format_p(p));
}

std::string WeightedSpace::describe() const {
  return "L_{" + format_p(p) + "," + num(alpha) + "}";
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") return kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail_validation("cannot parse p from '" + text + "'");
  }
  if (used != text.size()) fail_validation("cannot parse p from '" + text + "'");
  if (!(v >= 1.0)) fail_validation("p must be in [1, inf], got " + text);
  return v;
}

std::string format_p(double p) { return p == kInf ? "inf" : num(p); }

}  // namespace smoothlab
