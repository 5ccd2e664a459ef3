#include "slabrbf/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "slabrbf/assembly.hpp"
#include "slabrbf/benchmark.hpp"
#include "slabrbf/field.hpp"
#include "slabrbf/reference_data.hpp"
#include "slabrbf/solver.hpp"

namespace slabrbf {

namespace {

constexpr int kFluxCurveSamples = 101;

std::string num(double value) { return fmt::format("{:.10e}", value); }

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

std::vector<double> uniform(int samples, double a, double b) {
  std::vector<double> values(samples);
  for (int i = 0; i < samples; ++i) values[i] = i == samples - 1 ? b : a + (b - a) * i / (samples - 1);
  return values;
}

void report_warnings(const SolveReport& report, CommandIo& io, const std::string& context) {
  for (const auto& warning : solve_warnings(report)) {
    fmt::print(io.err, "warning: {}{}\n", context.empty() ? "" : context + ": ", warning);
  }
}

void write_fields(const RunConfig& config, const RunResult& result) {
  const auto& s = config.settings;
  const QuadratureRule scatter_rule = gauss_legendre(s.scatter_quad_points, -1.0, 1.0);
  const QuadratureRule flux_rule = gauss_legendre(s.flux_quad_points, 0.0, 1.0);
  const auto ys = uniform(config.field_samples, 0.0, 1.0);
  const auto xs = uniform(config.field_samples, -1.0, 1.0);

  auto intensity = open_output(config.output_dir, "intensity.csv");
  auto residual = open_output(config.output_dir, "residual.csv");
  intensity << "y,x,intensity\n";
  residual << "y,x,residual\n";
  for (double y : ys) {
    const auto res = result.field.residual_row(y, xs, scatter_rule);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      intensity << num(y) << ',' << num(xs[i]) << ',' << num(result.field.intensity(y, xs[i])) << '\n';
      residual << num(y) << ',' << num(xs[i]) << ',' << num(res[i]) << '\n';
    }
  }

  auto flux = open_output(config.output_dir, "flux.csv");
  flux << "y,flux\n";
  for (double y : uniform(kFluxCurveSamples, 0.0, 1.0)) {
    flux << num(y) << ',' << num(result.field.flux(y, flux_rule)) << '\n';
  }
}

std::string solve_header(const SolveReport& report) {
  return fmt::format("# condition_estimate={}\n# relative_residual={}\n", num(report.condition_estimate),
                     num(report.relative_residual));
}

}  // namespace

int cmd_solve(const RunConfig& config, CommandIo io) {
  const SlabProblem problem = config.problem();
  const RunResult result = run(problem, config.settings, true);
  report_warnings(result.report, io, "");

  const auto& s = config.settings;
  auto summary = open_output(config.output_dir, "summary.csv");
  summary << solve_header(result.report);
  summary << "kernel,c,m,n,flux_bottom,residual_norm_sq,condition_estimate,relative_residual\n";
  summary << kernel_family_name(s.family) << ',' << num(s.shape) << ',' << s.m << ',' << s.n << ','
          << num(result.flux_bottom) << ',' << num(*result.residual_norm) << ','
          << num(result.report.condition_estimate) << ',' << num(result.report.relative_residual)
          << '\n';
  if (config.write_fields) write_fields(config, result);

  fmt::print(io.out, "F+(1)          = {:.6f}\n", result.flux_bottom);
  fmt::print(io.out, "||Res||^2      = {:.4e}\n", *result.residual_norm);
  if (io.verbose) {
    fmt::print(io.out, "condition est. = {:.3e}\n", result.report.condition_estimate);
    fmt::print(io.out, "rel. residual  = {:.3e}\n", result.report.relative_residual);
    fmt::print(io.out, "max |Res| at collocation nodes = {:.3e}\n", result.fit.max_residual);
    fmt::print(io.out, "max inflow mismatch            = {:.3e}\n", result.fit.max_boundary_mismatch);
  }
  return kExitSuccess;
}

int cmd_table2(const RunConfig& config, CommandIo io) {
  const auto cells = sweep_table2(config.settings);
  auto csv = open_output(config.output_dir, "table2.csv");
  csv << "c1,t0,computed,ref_present,delta_present,ref_exact,delta_exact,"
         "condition_estimate,relative_residual,status\n";
  fmt::print(io.out, "{:>6} {:>5} {:>10} {:>10} {:>10} {:>8} {:>10}\n", "c1", "t0", "F+(1)",
             "present", "delta", "exact", "delta");
  bool failed = false;
  for (const auto& cell : cells) {
    csv << num(cell.c1) << ',' << num(cell.t0) << ',';
    if (!cell.result) {
      failed = true;
      csv << ",," << num(cell.reference_present) << ",," << num(cell.reference_exact) << ",,,,error: "
          << cell.error << '\n';
      fmt::print(io.out, "{:>6.2f} {:>5.1f} {:>10}  ({})\n", cell.c1, cell.t0, "error", cell.error);
      continue;
    }
    const auto& r = *cell.result;
    report_warnings(r.report, io, fmt::format("c1={} t0={}", cell.c1, cell.t0));
    const double d_present = r.flux_bottom - cell.reference_present;
    const double d_exact = r.flux_bottom - cell.reference_exact;
    csv << num(r.flux_bottom) << ',' << num(cell.reference_present) << ',' << num(d_present) << ','
        << num(cell.reference_exact) << ',' << num(d_exact) << ',' << num(r.report.condition_estimate)
        << ',' << num(r.report.relative_residual) << ",ok\n";
    fmt::print(io.out, "{:>6.2f} {:>5.1f} {:>10.6f} {:>10.6f} {:>10.2e} {:>8.3f} {:>10.2e}\n", cell.c1,
               cell.t0, r.flux_bottom, cell.reference_present, d_present, cell.reference_exact,
               d_exact);
  }
  return failed ? kExitNumerical : kExitSuccess;
}

int cmd_table3(const RunConfig& config, CommandIo io) {
  const auto rows = sweep_table3(config.settings);
  auto csv = open_output(config.output_dir, "table3.csv");
  csv << "n,computed_flux,ref_flux,delta_flux,computed_resnorm,ref_resnorm,resnorm_ratio,"
         "condition_estimate,relative_residual,status\n";
  fmt::print(io.out, "{:>4} {:>10} {:>10} {:>10} {:>11} {:>11} {:>6}\n", "n=m", "F+(1)", "ref",
             "delta", "||Res||^2", "ref", "ratio");
  bool failed = false;
  for (const auto& row : rows) {
    csv << row.n << ',';
    if (!row.result) {
      failed = true;
      csv << ',' << num(row.reference_flux) << ",,," << num(row.reference_residual_norm)
          << ",,,,error: " << row.error << '\n';
      fmt::print(io.out, "{:>4} {:>10}  ({})\n", row.n, "error", row.error);
      continue;
    }
    const auto& r = *row.result;
    report_warnings(r.report, io, fmt::format("n=m={}", row.n));
    const double delta = r.flux_bottom - row.reference_flux;
    const double ratio = *r.residual_norm / row.reference_residual_norm;
    csv << num(r.flux_bottom) << ',' << num(row.reference_flux) << ',' << num(delta) << ','
        << num(*r.residual_norm) << ',' << num(row.reference_residual_norm) << ',' << num(ratio) << ','
        << num(r.report.condition_estimate) << ',' << num(r.report.relative_residual) << ",ok\n";
    fmt::print(io.out, "{:>4} {:>10.6f} {:>10.6f} {:>10.2e} {:>11.4e} {:>11.4e} {:>6.2f}\n", row.n,
               r.flux_bottom, row.reference_flux, delta, *r.residual_norm,
               row.reference_residual_norm, ratio);
  }
  fmt::print(io.out, "\nclassical methods:");
  for (const auto& method : reference::example2_methods()) {
    fmt::print(io.out, " {}={}", method.method, method.flux);
  }
  fmt::print(io.out, "\n");
  return failed ? kExitNumerical : kExitSuccess;
}

int cmd_table4(const RunConfig& config, CommandIo io) {
  const auto cells = sweep_table4(config.settings);
  auto csv = open_output(config.output_dir, "table4.csv");
  csv << "kernel,n,t0,computed_resnorm,ref_resnorm,ratio,condition_estimate,relative_residual,"
         "status\n";
  fmt::print(io.out, "{:>4} {:>6} {:>5} {:>11} {:>11} {:>6}\n", "n=m", "kernel", "t0", "||Res||^2",
             "ref", "ratio");
  bool failed = false;
  for (const auto& cell : cells) {
    const auto name = kernel_family_name(cell.family);
    csv << name << ',' << cell.n << ',' << num(cell.t0) << ',';
    if (!cell.result) {
      failed = true;
      csv << ',' << num(cell.reference_residual_norm) << ",,,,error: " << cell.error << '\n';
      fmt::print(io.out, "{:>4} {:>6} {:>5.1f} {:>11}  ({})\n", cell.n, name, cell.t0, "error",
                 cell.error);
      continue;
    }
    const auto& r = *cell.result;
    report_warnings(r.report, io, fmt::format("{} n=m={} t0={}", name, cell.n, cell.t0));
    const double ratio = *r.residual_norm / cell.reference_residual_norm;
    csv << num(*r.residual_norm) << ',' << num(cell.reference_residual_norm) << ',' << num(ratio) << ','
        << num(r.report.condition_estimate) << ',' << num(r.report.relative_residual) << ",ok\n";
    fmt::print(io.out, "{:>4} {:>6} {:>5.1f} {:>11.4e} {:>11.4e} {:>6.2f}\n", cell.n, name, cell.t0,
               *r.residual_norm, cell.reference_residual_norm, ratio);
  }
  return failed ? kExitNumerical : kExitSuccess;
}

int cmd_dump_grid(const RunConfig& config, CommandIo io) {
  const auto partition = NodePartition::build(config.settings.m, config.settings.n, config.settings.xgrid);
  io.out << "k,y,x,class\n";
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const auto& node = partition.node(k);
    io.out << k + 1 << ',' << num(node.y) << ',' << num(node.x) << ','
           << node_class_name(partition.class_of(k)) << '\n';
  }
  return kExitSuccess;
}

int cmd_dump_matrix(const RunConfig& config, CommandIo io) {
  const auto& s = config.settings;
  const auto partition = NodePartition::build(s.m, s.n, s.xgrid);
  if (partition.size() > kMaxDumpSize) {
    fmt::print(io.err, "error: system size {} exceeds dump limit {}\n", partition.size(), kMaxDumpSize);
    return kExitUsage;
  }
  const RbfKernel kernel(s.family, s.shape);
  const auto system =
      assemble(config.problem(), partition, kernel, gauss_legendre(s.scatter_quad_points, -1.0, 1.0));
  io.out << "row,class";
  for (std::size_t k = 0; k < system.size(); ++k) io.out << ",a_" << k + 1;
  io.out << ",b\n";
  for (std::size_t r = 0; r < system.size(); ++r) {
    io.out << r + 1 << ',' << node_class_name(system.row_class[r]);
    for (double a : system.a.row(r)) io.out << ',' << num(a);
    io.out << ',' << num(system.b[r]) << '\n';
  }
  return kExitSuccess;
}

}  // namespace slabrbf
