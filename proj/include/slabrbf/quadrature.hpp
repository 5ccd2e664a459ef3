#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

namespace slabrbf {

/// Fixed nodes and weights on [a, b].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 0.0;

  std::size_t size() const { return nodes.size(); }
};

/// q-point Gauss-Legendre rule mapped to [a, b]. Nodes come from Newton
/// iteration on P_q, ascending order.
QuadratureRule gauss_legendre(int q, double a, double b);

/// Composite Simpson rule over `intervals` (even) uniform panels.
QuadratureRule composite_simpson(int intervals, double a, double b);

template <std::invocable<double> F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(rule.nodes[k]);
  return sum;
}

}  // namespace slabrbf
