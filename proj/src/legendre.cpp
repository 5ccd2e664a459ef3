#include "slabrbf/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace slabrbf {

namespace {

void check_direction(double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw std::invalid_argument("Legendre argument must lie in [-1, 1]");
  }
}

}  // namespace

void legendre_sweep(int order, double x, std::span<double> out) {
  out[0] = 1.0;
  if (order == 0) return;
  out[1] = x;
  for (int n = 1; n < order; ++n) {
    out[n + 1] = ((2.0 * n + 1.0) * x * out[n] - n * out[n - 1]) / (n + 1.0);
  }
}

double legendre(int i, double x) {
  if (i < 0) throw std::invalid_argument("Legendre degree must be non-negative");
  check_direction(x);
  if (i == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int n = 1; n < i; ++n) {
    const double next = ((2.0 * n + 1.0) * x * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

PhaseExpansion::PhaseExpansion(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("phase expansion needs at least c_0");
  if (coeffs_.front() != 1.0) throw std::invalid_argument("phase expansion requires c_0 = 1");
}

double PhaseExpansion::operator()(double x, double xhat) const {
  check_direction(x);
  check_direction(xhat);
  std::vector<double> px(coeffs_.size());
  std::vector<double> pxhat(coeffs_.size());
  legendre_sweep(order(), x, px);
  legendre_sweep(order(), xhat, pxhat);
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * px[i] * pxhat[i];
  return sum;
}

}  // namespace slabrbf
