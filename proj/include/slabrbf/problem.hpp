#pragma once

#include <functional>
#include <vector>

#include "slabrbf/legendre.hpp"

namespace slabrbf {

/// One radiative transfer instance on the slab 0 <= y <= 1, -1 <= x <= 1:
///
///   (x/t0) dI/dy + I = S(y) + (omega/2) int_{-1}^{1} P(x, xhat) I(y, xhat) dxhat
///   I(0, x) = I0(x) for x > 0,  I(1, x) = I1(x) for x < 0.
struct SlabProblem {
  double t0 = 1.0;
  double omega = 1.0;
  std::function<double(double)> source = [](double) { return 0.0; };
  PhaseExpansion phase;
  std::function<double(double)> i0 = [](double) { return 1.0; };
  std::function<double(double)> i1 = [](double) { return 0.0; };

  /// Throws std::invalid_argument on t0 <= 0, omega outside [0, 1] or a
  /// missing function.
  void validate() const;
};

/// Conservative scattering with linear-anisotropic phase 1 + c1 x xhat,
/// no source, unit inflow at the top and none at the bottom.
SlabProblem example1(double t0, double c1);

/// Unit-thickness slab with albedo 0.8 and a four-term phase expansion.
SlabProblem example2();

/// Polynomial source S(y) = sum_k coeffs[k] y^k (Horner).
std::function<double(double)> polynomial(std::vector<double> coeffs);

}  // namespace slabrbf
