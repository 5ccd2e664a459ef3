#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "slabrbf/assembly.hpp"
#include "slabrbf/dense_matrix.hpp"

namespace slabrbf {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pivot below this fraction of the largest matrix entry counts as zero.
inline constexpr double kPivotTolerance = 1e-14;

/// Condition estimates above this trigger a warning.
inline constexpr double kConditionWarning = 1e12;

/// Relative residuals above this flag the solve.
inline constexpr double kResidualFlag = 1e-8;

/// PA = LU with partial (row) pivoting. L is unit lower triangular and
/// shares storage with U.
class LuFactorization {
 public:
  /// Throws SingularMatrixError when a pivot falls below tolerance, and
  /// std::invalid_argument for a non-square matrix.
  explicit LuFactorization(DenseMatrix a);

  std::size_t size() const { return lu_.rows(); }

  /// Solves A x = b.
  std::vector<double> solve(std::span<const double> b) const;

  /// Solves A^T x = b.
  std::vector<double> solve_transposed(std::span<const double> b) const;

  /// Hager/Higham estimate of ||A^{-1}||_1.
  double inverse_norm_1_estimate() const;

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;  // row i of PA is row perm_[i] of A
};

struct SolveReport {
  std::vector<double> lambda;
  double relative_residual = 0.0;
  double condition_estimate = 0.0;

  bool ill_conditioned() const { return condition_estimate > kConditionWarning; }
  bool residual_flagged() const { return relative_residual > kResidualFlag; }
};

SolveReport solve(const DenseMatrix& a, std::span<const double> b);

inline SolveReport solve(const LinearSystem& system) { return solve(system.a, system.b); }

/// Human readable warnings for a report; empty when nothing is flagged.
std::vector<std::string> solve_warnings(const SolveReport& report);

}  // namespace slabrbf
