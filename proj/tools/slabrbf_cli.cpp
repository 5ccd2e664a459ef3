// Command-line driver for the slab RBF collocation solver.
//
//   slabrbf solve   [--config FILE] [--KEY VALUE ...] [-v]
//   slabrbf table2 | table3 | table4 [--output_dir DIR] [quadrature keys]
//   slabrbf dump-grid | dump-matrix [--config FILE] [--KEY VALUE ...]
//
// Every config key is also a flag; flags override the config file.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "slabrbf/commands.hpp"
#include "slabrbf/config.hpp"
#include "slabrbf/solver.hpp"

namespace {

struct Subcommand {
  CLI::App* app = nullptr;
  int (*handler)(const slabrbf::RunConfig&, slabrbf::CommandIo) = nullptr;
  std::string config_file;
  std::map<std::string, std::optional<std::string>> overrides;
};

void add_config_options(Subcommand& sub) {
  sub.app->add_option("--config", sub.config_file, "key = value config file");
  for (auto key : slabrbf::config_keys()) {
    const std::string name(key);
    sub.overrides[name];
    sub.app->add_option("--" + name, sub.overrides[name], "override config key " + name);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meshless RBF collocation solver for radiative transfer in a slab"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "print conditioning diagnostics");

  using namespace slabrbf;
  std::vector<Subcommand> subs = {
      {app.add_subcommand("solve", "solve one configured problem"), cmd_solve, {}, {}},
      {app.add_subcommand("table2", "Example 1 transmitted flux sweep"), cmd_table2, {}, {}},
      {app.add_subcommand("table3", "Example 2 flux and residual norm sweep"), cmd_table3, {}, {}},
      {app.add_subcommand("table4", "Example 1 residual norm sweep over kernels"), cmd_table4, {}, {}},
      {app.add_subcommand("dump-grid", "print the node partition as CSV"), cmd_dump_grid, {}, {}},
      {app.add_subcommand("dump-matrix", "print the assembled system as CSV"), cmd_dump_matrix, {}, {}},
  };
  for (auto& sub : subs) {
    add_config_options(sub);
    sub.app->add_flag("-v,--verbose", verbose, "print conditioning diagnostics");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  for (auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    RunConfig config;
    try {
      std::map<std::string, std::string> values;
      if (!sub.config_file.empty()) values = read_config_file(sub.config_file);
      for (const auto& [key, value] : sub.overrides) {
        if (value) values[key] = *value;
      }
      config = make_config(values);
    } catch (const ConfigError& e) {
      fmt::print(std::cerr, "config error: {}\n", e.what());
      return kExitUsage;
    }

    try {
      return sub.handler(config, CommandIo{std::cout, std::cerr, verbose});
    } catch (const SingularMatrixError& e) {
      fmt::print(std::cerr, "numerical failure: {}\n", e.what());
      return kExitNumerical;
    } catch (const std::invalid_argument& e) {
      fmt::print(std::cerr, "error: {}\n", e.what());
      return kExitUsage;
    } catch (const std::exception& e) {
      fmt::print(std::cerr, "error: {}\n", e.what());
      return kExitNumerical;
    }
  }
  return kExitUsage;
}
