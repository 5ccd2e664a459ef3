#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slabrbf/field.hpp"
#include "slabrbf/grid.hpp"
#include "slabrbf/kernels.hpp"
#include "slabrbf/problem.hpp"
#include "slabrbf/solver.hpp"

namespace slabrbf {

/// Discretization and quadrature choices for one solve. Defaults follow the
/// published benchmark setup (MQ, c = 0.3, m = n = 20).
struct SolverSettings {
  KernelFamily family = KernelFamily::MQ;
  double shape = 0.3;
  int m = 20;
  int n = 20;
  XGrid xgrid = XGrid::Full;
  int scatter_quad_points = 64;
  int flux_quad_points = 64;
  int resnorm_grid_x = 200;
  int resnorm_grid_y = 100;
};

struct RunResult {
  NodePartition partition;
  SolveReport report;
  SolvedField field;
  double flux_bottom = 0.0;                  // F+(1)
  std::optional<double> residual_norm;       // ||Res||^2, when requested
  CollocationFit fit;
};

/// Assemble, solve and post-process one problem. Throws SingularMatrixError
/// if the collocation matrix is numerically singular.
RunResult run(const SlabProblem& problem, const SolverSettings& settings,
              bool with_residual_norm = true);

struct Table2Cell {
  double c1 = 0.0;
  double t0 = 0.0;
  double reference_present = 0.0;
  double reference_exact = 0.0;
  std::optional<RunResult> result;
  std::string error;
};

struct Table3Row {
  int n = 0;
  double reference_flux = 0.0;
  double reference_residual_norm = 0.0;
  std::optional<RunResult> result;
  std::string error;
};

struct Table4Cell {
  KernelFamily family = KernelFamily::MQ;
  int n = 0;
  double t0 = 0.0;
  double reference_residual_norm = 0.0;
  std::optional<RunResult> result;
  std::string error;
};

// Sweeps over the benchmark grids. Per-cell solve failures land in `error`
// and the sweep continues. Kernel, shape and grid size come from the sweep;
// quadrature settings come from `base`.
std::vector<Table2Cell> sweep_table2(const SolverSettings& base);
std::vector<Table3Row> sweep_table3(const SolverSettings& base);
std::vector<Table4Cell> sweep_table4(const SolverSettings& base);

}  // namespace slabrbf
