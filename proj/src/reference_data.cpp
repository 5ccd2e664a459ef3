#include "slabrbf/reference_data.hpp"

#include <array>

namespace slabrbf::reference {

namespace {

constexpr std::array<FluxCell, 12> kExample1Flux = {{
    {0.7, 0.1, 0.93071, 0.931},
    {0.7, 0.5, 0.75049, 0.750},
    {0.7, 1.0, 0.61211, 0.611},
    {0.7, 3.0, 0.35834, 0.358},
    {0.0, 0.1, 0.91581, 0.916},
    {0.0, 0.5, 0.70427, 0.704},
    {0.0, 1.0, 0.55351, 0.553},
    {0.0, 3.0, 0.30132, 0.301},
    {-0.7, 0.1, 0.901372, 0.901},
    {-0.7, 0.5, 0.663414, 0.663},
    {-0.7, 1.0, 0.504659, 0.505},
    {-0.7, 3.0, 0.260349, 0.260},
}};

constexpr std::array<Example2Row, 4> kExample2 = {{
    {10, 0.457662, 9.4385e-04},
    {16, 0.456551, 1.3043e-04},
    {20, 0.456254, 7.0662e-05},
    {24, 0.456096, 5.6480e-05},
}};

constexpr std::array<MethodValue, 10> kExample2Methods = {{
    {"GEA", 0.458},
    {"MTFM", 0.471},
    {"P1", 0.465},
    {"P3", 0.456},
    {"F1", 0.455},
    {"F3", 0.456},
    {"F9", 0.456},
    {"PLM", 0.4564},
    {"Tau", 0.4564},
    {"Galerkin", 0.4564},
}};

using enum KernelFamily;

constexpr std::array<ResidualCell, 48> kExample1Residual = {{
    {MQ, 10, 0.1, 5.2467e-03},  {MQ, 10, 0.5, 6.6703e-04},  {MQ, 10, 1.0, 1.5652e-04},  {MQ, 10, 3.0, 2.3255e-05},
    {IMQ, 10, 0.1, 4.0001e-02}, {IMQ, 10, 0.5, 1.5039e-03}, {IMQ, 10, 1.0, 5.3730e-04}, {IMQ, 10, 3.0, 1.6458e-04},
    {IQ, 10, 0.1, 2.7706e-01},  {IQ, 10, 0.5, 8.0117e-03},  {IQ, 10, 1.0, 2.3783e-03},  {IQ, 10, 3.0, 6.0969e-04},
    {MQ, 16, 0.1, 4.0359e-03},  {MQ, 16, 0.5, 3.0487e-04},  {MQ, 16, 1.0, 8.7236e-05},  {MQ, 16, 3.0, 6.9267e-06},
    {IMQ, 16, 0.1, 3.5955e-03}, {IMQ, 16, 0.5, 2.7085e-04}, {IMQ, 16, 1.0, 7.9158e-05}, {IMQ, 16, 3.0, 7.3361e-06},
    {IQ, 16, 0.1, 4.5537e-03},  {IQ, 16, 0.5, 2.9087e-04},  {IQ, 16, 1.0, 8.6775e-05},  {IQ, 16, 3.0, 1.1738e-05},
    {MQ, 20, 0.1, 3.5640e-03},  {MQ, 20, 0.5, 2.4073e-04},  {MQ, 20, 1.0, 7.1807e-05},  {MQ, 20, 3.0, 4.2414e-06},
    {IMQ, 20, 0.1, 3.0911e-03}, {IMQ, 20, 0.5, 2.1409e-04}, {IMQ, 20, 1.0, 6.4552e-05}, {IMQ, 20, 3.0, 3.8916e-06},
    {IQ, 20, 0.1, 2.9274e-03},  {IQ, 20, 0.5, 2.0439e-04},  {IQ, 20, 1.0, 6.2031e-05},  {IQ, 20, 3.0, 4.0679e-06},
    {MQ, 24, 0.1, 3.1107e-03},  {MQ, 24, 0.5, 2.0311e-04},  {MQ, 24, 1.0, 5.8004e-05},  {MQ, 24, 3.0, 2.4874e-06},
    {IMQ, 24, 0.1, 2.7001e-03}, {IMQ, 24, 0.5, 1.8089e-04}, {IMQ, 24, 1.0, 5.2018e-05}, {IMQ, 24, 3.0, 2.1938e-06},
    {IQ, 24, 0.1, 2.5609e-03},  {IQ, 24, 0.5, 1.7280e-04},  {IQ, 24, 1.0, 4.9889e-05},  {IQ, 24, 3.0, 2.1731e-06},
}};

}  // namespace

std::span<const FluxCell> example1_flux() { return kExample1Flux; }
std::span<const Example2Row> example2_rows() { return kExample2; }
std::span<const MethodValue> example2_methods() { return kExample2Methods; }
std::span<const ResidualCell> example1_residual_norms() { return kExample1Residual; }

std::optional<double> example1_residual_norm(KernelFamily family, int n, double t0) {
  for (const auto& cell : kExample1Residual) {
    if (cell.family == family && cell.n == n && cell.t0 == t0) return cell.residual_norm;
  }
  return std::nullopt;
}

}  // namespace slabrbf::reference
