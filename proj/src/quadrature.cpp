#include "slabrbf/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slabrbf/legendre.hpp"

namespace slabrbf {

namespace {

constexpr double kNewtonTolerance = 1e-14;
constexpr int kMaxNewtonSteps = 100;

void check_interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("quadrature interval requires a < b");
}

}  // namespace

QuadratureRule gauss_legendre(int q, double a, double b) {
  if (q < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one point");
  check_interval(a, b);

  std::vector<double> t(q);
  std::vector<double> w(q);
  std::vector<double> p(q + 1);
  const int half = (q + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
      legendre_sweep(q, z, p);
      dp = q * (z * p[q] - p[q - 1]) / (z * z - 1.0);
      const double dz = p[q] / dp;
      z -= dz;
      if (std::abs(dz) <= kNewtonTolerance) break;
    }
    legendre_sweep(q, z, p);
    dp = q * (z * p[q] - p[q - 1]) / (z * z - 1.0);
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    t[i] = -z;
    t[q - 1 - i] = z;
    w[i] = weight;
    w[q - 1 - i] = weight;
  }
  if (q % 2 == 1) t[q / 2] = 0.0;

  QuadratureRule rule{std::vector<double>(q), std::vector<double>(q), a, b};
  const double mid = 0.5 * (a + b);
  const double half_width = 0.5 * (b - a);
  for (int k = 0; k < q; ++k) {
    rule.nodes[k] = mid + half_width * t[k];
    rule.weights[k] = half_width * w[k];
  }
  return rule;
}

QuadratureRule composite_simpson(int intervals, double a, double b) {
  if (intervals < 2 || intervals % 2 != 0) {
    throw std::invalid_argument("composite Simpson needs an even number of intervals >= 2");
  }
  check_interval(a, b);
  const double h = (b - a) / intervals;
  QuadratureRule rule{std::vector<double>(intervals + 1), std::vector<double>(intervals + 1), a, b};
  for (int k = 0; k <= intervals; ++k) {
    rule.nodes[k] = k == intervals ? b : a + k * h;
    const double factor = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    rule.weights[k] = factor * h / 3.0;
  }
  return rule;
}

}  // namespace slabrbf
