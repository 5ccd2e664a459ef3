#pragma once

#include <span>
#include <vector>

#include "slabrbf/grid.hpp"
#include "slabrbf/kernels.hpp"
#include "slabrbf/problem.hpp"
#include "slabrbf/quadrature.hpp"

namespace slabrbf {

/// I_N(y, x) = sum_k lambda_k phi(|(y, x) - center_k|) together with the
/// problem it approximates. Evaluation points must lie in [0,1] x [-1,1];
/// anything else throws std::out_of_range.
class SolvedField {
 public:
  /// Throws std::invalid_argument when lambda and centers differ in length.
  SolvedField(std::vector<double> lambda, RbfKernel kernel, std::vector<Point> centers,
              SlabProblem problem);

  const std::vector<double>& lambda() const { return lambda_; }
  const RbfKernel& kernel() const { return kernel_; }
  const std::vector<Point>& centers() const { return centers_; }
  const SlabProblem& problem() const { return problem_; }

  double intensity(double y, double x) const;
  double intensity_dy(double y, double x) const;

  /// Res(y, x): the transfer equation with I_N substituted, scattering
  /// integral taken with `scatter_rule` on [-1, 1].
  double residual(double y, double x, const QuadratureRule& scatter_rule) const;

  /// Res(y, x_i) for every x_i in `xs`, sharing the angular integral.
  std::vector<double> residual_row(double y, std::span<const double> xs,
                                   const QuadratureRule& scatter_rule) const;

  /// F+(y) = 2 int_0^1 I_N(y, x) x dx with `rule` on [0, 1].
  double flux(double y, const QuadratureRule& rule) const;

  /// int_{-1}^{1} int_0^1 Res^2 dy dx by composite Simpson with grid_x panels
  /// in x and grid_y panels in y (both even).
  double residual_norm(int grid_x, int grid_y, const QuadratureRule& scatter_rule) const;

 private:
  // (omega/2) int P(x, xhat) I_N(y, xhat) dxhat for each x in xs.
  std::vector<double> scattering(double y, std::span<const double> xs,
                                 const QuadratureRule& scatter_rule) const;

  std::vector<double> lambda_;
  RbfKernel kernel_;
  std::vector<Point> centers_;
  SlabProblem problem_;
};

/// How well a solved field satisfies its own collocation equations.
struct CollocationFit {
  double max_residual = 0.0;           // over residual-class nodes
  double max_boundary_mismatch = 0.0;  // over inflow nodes
};

CollocationFit collocation_fit(const SolvedField& field, const NodePartition& partition,
                               const QuadratureRule& scatter_rule);

}  // namespace slabrbf
