#include "slabrbf/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace slabrbf {

void SlabProblem::validate() const {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw std::invalid_argument("t0 must be positive");
  if (!(omega >= 0.0 && omega <= 1.0)) throw std::invalid_argument("omega must lie in [0, 1]");
  if (!source || !i0 || !i1) throw std::invalid_argument("source and boundary data must be set");
}

SlabProblem example1(double t0, double c1) {
  SlabProblem problem;
  problem.t0 = t0;
  problem.omega = 1.0;
  problem.phase = PhaseExpansion({1.0, c1});
  problem.validate();
  return problem;
}

SlabProblem example2() {
  SlabProblem problem;
  problem.t0 = 1.0;
  problem.omega = 0.8;
  problem.phase = PhaseExpansion({1.0, 0.6438, 0.5542, 0.1036, 0.0105});
  return problem;
}

std::function<double(double)> polynomial(std::vector<double> coeffs) {
  return [coeffs = std::move(coeffs)](double y) {
    double value = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * y + *it;
    return value;
  };
}

}  // namespace slabrbf
