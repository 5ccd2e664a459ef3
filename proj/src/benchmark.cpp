#include "slabrbf/benchmark.hpp"

#include <exception>

#include "slabrbf/assembly.hpp"
#include "slabrbf/reference_data.hpp"

namespace slabrbf {

RunResult run(const SlabProblem& problem, const SolverSettings& settings, bool with_residual_norm) {
  const RbfKernel kernel(settings.family, settings.shape);
  NodePartition partition = NodePartition::build(settings.m, settings.n, settings.xgrid);
  const QuadratureRule scatter_rule = gauss_legendre(settings.scatter_quad_points, -1.0, 1.0);
  const QuadratureRule flux_rule = gauss_legendre(settings.flux_quad_points, 0.0, 1.0);

  const LinearSystem system = assemble(problem, partition, kernel, scatter_rule);
  SolveReport report = solve(system);
  SolvedField field(report.lambda, kernel, partition.nodes(), problem);

  const double flux_bottom = field.flux(1.0, flux_rule);
  std::optional<double> residual_norm;
  if (with_residual_norm) {
    residual_norm = field.residual_norm(settings.resnorm_grid_x, settings.resnorm_grid_y, scatter_rule);
  }
  const CollocationFit fit = collocation_fit(field, partition, scatter_rule);
  return RunResult{std::move(partition), std::move(report), std::move(field), flux_bottom,
                   residual_norm, fit};
}

namespace {

template <typename Cell>
void run_cell(Cell& cell, const SlabProblem& problem, const SolverSettings& settings,
              bool with_residual_norm) {
  try {
    cell.result = run(problem, settings, with_residual_norm);
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
}

}  // namespace

std::vector<Table2Cell> sweep_table2(const SolverSettings& base) {
  SolverSettings settings = base;
  settings.family = KernelFamily::MQ;
  settings.shape = 0.3;
  settings.m = settings.n = 20;

  std::vector<Table2Cell> cells;
  for (const auto& ref : reference::example1_flux()) {
    Table2Cell cell{ref.c1, ref.t0, ref.present, ref.exact, std::nullopt, {}};
    run_cell(cell, example1(ref.t0, ref.c1), settings, false);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<Table3Row> sweep_table3(const SolverSettings& base) {
  SolverSettings settings = base;
  settings.family = KernelFamily::MQ;
  settings.shape = 0.3;

  std::vector<Table3Row> rows;
  for (const auto& ref : reference::example2_rows()) {
    settings.m = settings.n = ref.n;
    Table3Row row{ref.n, ref.flux, ref.residual_norm, std::nullopt, {}};
    run_cell(row, example2(), settings, true);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table4Cell> sweep_table4(const SolverSettings& base) {
  SolverSettings settings = base;
  settings.shape = 0.3;

  std::vector<Table4Cell> cells;
  for (const auto& ref : reference::example1_residual_norms()) {
    settings.family = ref.family;
    settings.m = settings.n = ref.n;
    Table4Cell cell{ref.family, ref.n, ref.t0, ref.residual_norm, std::nullopt, {}};
    run_cell(cell, example1(ref.t0, 0.7), settings, true);
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace slabrbf
