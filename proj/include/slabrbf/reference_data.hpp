#pragma once

#include <optional>
#include <span>

#include "slabrbf/kernels.hpp"

namespace slabrbf::reference {

// Published benchmark values for the slab problems, copied digit for digit.
// "present" is the published RBF collocation result (MQ, c = 0.3), "exact"
// the published exact transmitted flux.

struct FluxCell {
  double c1;
  double t0;
  double present;
  double exact;
};

/// Example 1, F+(1), m = n = 20: c1 in {0.7, 0, -0.7} x t0 in {0.1, 0.5, 1, 3}.
std::span<const FluxCell> example1_flux();

struct Example2Row {
  int n;
  double flux;
  double residual_norm;
};

/// Example 2, F+(1) and ||Res||^2 for m = n in {10, 16, 20, 24}.
std::span<const Example2Row> example2_rows();

/// Example 2 F+(1) from the classical comparison methods.
struct MethodValue {
  const char* method;
  double flux;
};
std::span<const MethodValue> example2_methods();

struct ResidualCell {
  KernelFamily family;
  int n;
  double t0;
  double residual_norm;
};

/// Example 1 with c1 = 0.7, c = 0.3: ||Res||^2 for kernels {MQ, IMQ, IQ} x
/// m = n in {10, 16, 20, 24} x t0 in {0.1, 0.5, 1, 3}.
std::span<const ResidualCell> example1_residual_norms();

std::optional<double> example1_residual_norm(KernelFamily family, int n, double t0);

}  // namespace slabrbf::reference
