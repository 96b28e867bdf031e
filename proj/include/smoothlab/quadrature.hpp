#pragma once

#include <memory>
#include <string>
#include <vector>

namespace smoothlab {

enum class RuleKind { GaussLegendre, GaussJacobi, GaussChebyshev, TrapezoidPeriodic };

std::string to_string(RuleKind kind);

// Nodes are increasing. Gauss rules live on (-1,1); the periodic trapezoid
// rule lives on [0, 2pi). For GaussJacobi the weight is (1-x)^a (1+x)^b,
// for GaussChebyshev it is (1-x^2)^(-1/2).
struct QuadratureRule {
  RuleKind kind = RuleKind::GaussLegendre;
  double a = 0.0;
  double b = 0.0;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

QuadratureRule gauss_rule(RuleKind kind, int order, double a = 0.0, double b = 0.0);

// Shared, process-wide cache of rules. Rules are immutable once built.
std::shared_ptr<const QuadratureRule> cached_rule(RuleKind kind, int order, double a = 0.0,
                                                  double b = 0.0);

// Gauss-Legendre rule mapped to [lo, hi].
QuadratureRule legendre_on(double lo, double hi, int order);

// Total mass of the Jacobi weight, int (1-x)^a (1+x)^b dx.
double jacobi_weight_mass(double a, double b);

}  // namespace smoothlab
