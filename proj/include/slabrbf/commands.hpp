#pragma once

#include <ostream>

#include "slabrbf/config.hpp"

namespace slabrbf {

enum ExitCode : int { kExitSuccess = 0, kExitUsage = 1, kExitNumerical = 2 };

struct CommandIo {
  std::ostream& out;
  std::ostream& err;
  bool verbose = false;
};

/// Solves the configured problem and writes summary.csv (plus intensity.csv,
/// residual.csv and flux.csv when write_fields is set) into output_dir.
int cmd_solve(const RunConfig& config, CommandIo io);

/// Benchmark sweeps; each writes tableN.csv into output_dir and prints a
/// formatted table. Returns kExitNumerical if any cell failed.
int cmd_table2(const RunConfig& config, CommandIo io);
int cmd_table3(const RunConfig& config, CommandIo io);
int cmd_table4(const RunConfig& config, CommandIo io);

/// CSV of the node partition (k, y, x, class) on io.out.
int cmd_dump_grid(const RunConfig& config, CommandIo io);

/// CSV of the assembled system (row, class, a_1..a_N, b) on io.out.
/// Refuses systems larger than kMaxDumpSize.
inline constexpr std::size_t kMaxDumpSize = 625;
int cmd_dump_matrix(const RunConfig& config, CommandIo io);

}  // namespace slabrbf
