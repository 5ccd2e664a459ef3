#pragma once

#include <span>
#include <vector>

namespace slabrbf {

/// P_i(x) by the three-term forward recurrence. Rejects |x| > 1.
double legendre(int i, double x);

/// P_0(x) .. P_order(x) in one sweep of the recurrence, no domain check.
void legendre_sweep(int order, double x, std::span<double> out);

/// Legendre expansion of an azimuthally symmetric phase function,
/// P(x, xhat) = sum_i c_i P_i(x) P_i(xhat), with c_0 = 1.
class PhaseExpansion {
 public:
  /// Throws std::invalid_argument if coeffs is empty or coeffs[0] != 1.
  explicit PhaseExpansion(std::vector<double> coeffs);

  /// Isotropic scattering, coefficients {1}.
  PhaseExpansion() : coeffs_{1.0} {}

  const std::vector<double>& coeffs() const { return coeffs_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double x, double xhat) const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace slabrbf
