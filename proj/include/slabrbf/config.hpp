#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slabrbf/benchmark.hpp"
#include "slabrbf/problem.hpp"

namespace slabrbf {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Builtin { None, Example1, Example2 };

/**
 * Everything a CLI run needs. Built from a flat `key = value` file and/or
 * command-line overrides; `#` starts a comment. Lists are comma or
 * whitespace separated.
 *
 * Problem keys:
 *   builtin        example1 | example2 | none           (default example1)
 *   t0, c1         example1 only (defaults 1 and 0.7); t0 also for none
 *   omega, phase_coeffs, source_poly, i0_const, i1_const   builtin = none only
 * Discretization keys:
 *   kernel (mq), c (0.3), m (20), n (20), x_grid (full | literal)
 *   scatter_quad_points (64), flux_quad_points (64)
 *   resnorm_grid_x (200), resnorm_grid_y (100)
 * Output keys:
 *   output_dir (.), write_fields (false), field_samples (51)
 */
struct RunConfig {
  Builtin builtin = Builtin::Example1;
  double t0 = 1.0;
  double c1 = 0.7;
  double omega = 1.0;
  std::vector<double> phase_coeffs{1.0};
  std::vector<double> source_poly{0.0};
  double i0_const = 1.0;
  double i1_const = 0.0;

  SolverSettings settings;

  std::filesystem::path output_dir = ".";
  bool write_fields = false;
  int field_samples = 51;

  /// The problem described by the config.
  SlabProblem problem() const;
};

/// Every recognised key, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Parses `key = value` text. Unknown keys, malformed values and violated
/// constraints throw ConfigError.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Builds a validated config from raw key/value pairs; later sources win.
RunConfig make_config(const std::map<std::string, std::string>& values);

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

}  // namespace slabrbf
