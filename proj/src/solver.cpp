#include "slabrbf/solver.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace slabrbf {

LuFactorization::LuFactorization(DenseMatrix a) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LU needs a square matrix");
  const std::size_t n = lu_.rows();
  perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (double e : lu_.row(r)) scale = std::max(scale, std::abs(e));
  const double threshold = kPivotTolerance * scale;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double candidate = std::abs(lu_(r, k));
      if (candidate > best) {
        best = candidate;
        pivot = r;
      }
    }
    if (!(best > threshold)) {
      throw SingularMatrixError(fmt::format(
          "matrix is singular to working precision (pivot {:.3e} at step {} of {})", best, k, n));
    }
    if (pivot != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(pivot).begin());
      std::swap(perm_[k], perm_[pivot]);
    }
    const auto pivot_row = lu_.row(k);
    const double inv = 1.0 / pivot_row[k];
    for (std::size_t r = k + 1; r < n; ++r) {
      auto row = lu_.row(r);
      const double factor = row[k] * inv;
      row[k] = factor;
      if (factor == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) row[c] -= factor * pivot_row[c];
    }
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  const std::size_t n = size();
  if (b.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = lu_.row(i);
    double sum = b[perm_[i]];
    for (std::size_t c = 0; c < i; ++c) sum -= row[c] * x[c];
    x[i] = sum;
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto row = lu_.row(i);
    double sum = x[i];
    for (std::size_t c = i + 1; c < n; ++c) sum -= row[c] * x[c];
    x[i] = sum / row[i];
  }
  return x;
}

std::vector<double> LuFactorization::solve_transposed(std::span<const double> b) const {
  // A^T = U^T L^T P, so solve U^T z = b, L^T w = z, then x = P^T w.
  const std::size_t n = size();
  if (b.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  std::vector<double> w(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    w[i] /= lu_(i, i);
    const auto row = lu_.row(i);
    for (std::size_t c = i + 1; c < n; ++c) w[c] -= row[c] * w[i];
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto row = lu_.row(i);
    for (std::size_t c = 0; c < i; ++c) w[c] -= row[c] * w[i];
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = w[i];
  return x;
}

double LuFactorization::inverse_norm_1_estimate() const {
  const std::size_t n = size();
  if (n == 0) return 0.0;
  const auto norm1 = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += std::abs(e);
    return s;
  };

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  double estimate = 0.0;
  std::size_t last_index = n;
  for (int iteration = 0; iteration < 5; ++iteration) {
    const std::vector<double> y = solve(x);
    estimate = std::max(estimate, norm1(y));
    std::vector<double> sign(n);
    for (std::size_t i = 0; i < n; ++i) sign[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    const std::vector<double> z = solve_transposed(sign);

    std::size_t best = 0;
    double z_dot_x = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      z_dot_x += z[i] * x[i];
      if (std::abs(z[i]) > std::abs(z[best])) best = i;
    }
    if (std::abs(z[best]) <= z_dot_x || best == last_index) break;
    last_index = best;
    std::fill(x.begin(), x.end(), 0.0);
    x[best] = 1.0;
  }

  // Higham's alternating test vector guards against the classic failure modes.
  std::vector<double> alt(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double magnitude = n > 1 ? 1.0 + static_cast<double>(i) / static_cast<double>(n - 1) : 1.0;
    alt[i] = (i % 2 == 0) ? magnitude : -magnitude;
  }
  const double alt_estimate = 2.0 * norm1(solve(alt)) / (3.0 * static_cast<double>(n));
  return std::max(estimate, alt_estimate);
}

SolveReport solve(const DenseMatrix& a, std::span<const double> b) {
  if (a.rows() != b.size()) throw std::invalid_argument("system dimensions disagree");
  const LuFactorization lu(a);
  SolveReport report;
  report.lambda = lu.solve(b);

  std::vector<double> residual = a.multiply(report.lambda);
  for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= b[i];
  const double b_norm = norm_2(b);
  const double r_norm = norm_2(residual);
  report.relative_residual = b_norm > 0.0 ? r_norm / b_norm : r_norm;
  report.condition_estimate = a.norm_1() * lu.inverse_norm_1_estimate();
  return report;
}

std::vector<std::string> solve_warnings(const SolveReport& report) {
  std::vector<std::string> warnings;
  if (report.ill_conditioned()) {
    warnings.push_back(fmt::format("ill-conditioned system: condition estimate {:.3e} exceeds {:.0e}",
                                   report.condition_estimate, kConditionWarning));
  }
  if (report.residual_flagged()) {
    warnings.push_back(fmt::format("relative residual {:.3e} exceeds {:.0e}",
                                   report.relative_residual, kResidualFlag));
  }
  return warnings;
}

}  // namespace slabrbf
