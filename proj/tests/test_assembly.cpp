#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "slabrbf/assembly.hpp"
#include "slabrbf/solver.hpp"

using namespace slabrbf;

namespace {

const QuadratureRule& scatter64() {
  static const QuadratureRule rule = gauss_legendre(64, -1.0, 1.0);
  return rule;
}

}  // namespace

TEST_CASE("diagonal entry at a coincident node with no scattering") {
  SlabProblem problem;
  problem.omega = 0.0;
  problem.t0 = 1.0;
  const auto partition = NodePartition::build(2, 2);
  const RbfKernel kernel(KernelFamily::MQ, 0.3);
  const auto system = assemble(problem, partition, kernel, scatter64());
  const std::size_t p = partition.index(1, 2);  // (0.5, 1)
  REQUIRE(partition.node(p).y == 0.5);
  REQUIRE(partition.node(p).x == 1.0);
  CHECK(system.a(p, p) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("inflow rows carry boundary data") {
  const auto partition = NodePartition::build(4, 4);
  const RbfKernel kernel(KernelFamily::MQ, 0.3);
  const auto system = assemble(example1(1.0, 0.7), partition, kernel, scatter64());
  CHECK(system.row_class == partition.classes());
  for (std::size_t k = 0; k < partition.size(); ++k) {
    if (partition.class_of(k) == NodeClass::Omega5Bc) CHECK(system.b[k] == 1.0);
    if (partition.class_of(k) == NodeClass::Omega6Bc) CHECK(system.b[k] == 0.0);
    if (is_residual_class(partition.class_of(k))) CHECK(system.b[k] == 0.0);
  }

  SlabProblem custom;
  custom.i1 = [](double x) { return 0.25 - x; };
  custom.source = polynomial({0.5, 2.0});
  const auto with_data = assemble(custom, partition, kernel, scatter64());
  const auto interp = interpolation_matrix(partition, kernel);
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const auto& node = partition.node(k);
    switch (partition.class_of(k)) {
      case NodeClass::Omega6Bc:
        CHECK(with_data.b[k] == 0.25 - node.x);
        break;
      case NodeClass::Omega5Bc:
        break;
      default:
        CHECK(with_data.b[k] == doctest::Approx(0.5 + 2.0 * node.y).epsilon(1e-15));
        continue;
    }
    for (std::size_t c = 0; c < partition.size(); ++c) CHECK(with_data.a(k, c) == interp(k, c));
  }
}

TEST_CASE("without scattering, residual rows are (x/t0) D + Phi") {
  SlabProblem problem;
  problem.omega = 0.0;
  problem.t0 = 0.5;
  const auto partition = NodePartition::build(6, 6);
  for (auto family : {KernelFamily::MQ, KernelFamily::IMQ, KernelFamily::GA, KernelFamily::IQ}) {
    const RbfKernel kernel(family, 0.3);
    const auto system = assemble(problem, partition, kernel, scatter64());
    // independent route: separate derivative and evaluation matrices
    DenseMatrix d(partition.size(), partition.size());
    DenseMatrix phi(partition.size(), partition.size());
    for (std::size_t r = 0; r < partition.size(); ++r) {
      for (std::size_t c = 0; c < partition.size(); ++c) {
        const Point& p = partition.node(r);
        const Point& q = partition.node(c);
        const double dy = p.y - q.y;
        const double r2 = dy * dy + (p.x - q.x) * (p.x - q.x);
        phi(r, c) = kernel.eval(std::sqrt(r2));
        d(r, c) = (kernel.eval_squared((p.y + 1e-6 - q.y) * (p.y + 1e-6 - q.y) + (p.x - q.x) * (p.x - q.x)) -
                   kernel.eval_squared((p.y - 1e-6 - q.y) * (p.y - 1e-6 - q.y) + (p.x - q.x) * (p.x - q.x))) /
                  2e-6;
      }
    }
    for (std::size_t r = 0; r < partition.size(); ++r) {
      if (!is_residual_class(partition.class_of(r))) continue;
      const double factor = partition.node(r).x / problem.t0;
      for (std::size_t c = 0; c < partition.size(); ++c) {
        CHECK(system.a(r, c) == doctest::Approx(factor * d(r, c) + phi(r, c)).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("scattering term agrees with direct phase-function quadrature") {
  const auto problem = example2();
  const auto partition = NodePartition::build(4, 4);
  const RbfKernel kernel(KernelFamily::IMQ, 0.3);
  const auto system = assemble(problem, partition, kernel, scatter64());
  // reference: integrate P(x_p, xhat) phi directly on a fine Simpson grid
  const auto fine = composite_simpson(4000, -1.0, 1.0);
  for (std::size_t r = 0; r < partition.size(); ++r) {
    if (!is_residual_class(partition.class_of(r))) continue;
    const Point& p = partition.node(r);
    for (std::size_t c = 0; c < partition.size(); ++c) {
      const Point& center = partition.node(c);
      const double scatter = integrate(fine, [&](double xhat) {
        return problem.phase(p.x, xhat) * kernel.eval(Point{p.y, xhat}, center);
      });
      const double expected = (p.x / problem.t0) * kernel.eval_dy(p, center) + kernel.eval(p, center) -
                              0.5 * problem.omega * scatter;
      CHECK(std::abs(system.a(r, c) - expected) <= 1e-10);
    }
  }
}

TEST_CASE("scattering quadrature is saturated at 64 points") {
  const auto partition = NodePartition::build(20, 20);
  const auto scatter128 = gauss_legendre(128, -1.0, 1.0);
  for (auto family : {KernelFamily::MQ, KernelFamily::IMQ, KernelFamily::IQ}) {
    const RbfKernel kernel(family, 0.3);
    const auto a = assemble(example1(1.0, 0.7), partition, kernel, scatter64());
    const auto b = assemble(example1(1.0, 0.7), partition, kernel, scatter128);
    double worst = 0.0;
    for (std::size_t r = 0; r < partition.size(); ++r)
      for (std::size_t c = 0; c < partition.size(); ++c) worst = std::max(worst, std::abs(a.a(r, c) - b.a(r, c)));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("assembly is deterministic") {
  const auto partition = NodePartition::build(8, 8);
  const RbfKernel kernel(KernelFamily::MQ, 0.3);
  const auto a = assemble(example2(), partition, kernel, scatter64());
  const auto b = assemble(example2(), partition, kernel, scatter64());
  CHECK(a.a == b.a);
  CHECK(a.b == b.b);
}

TEST_CASE("scatter rule must span [-1, 1]") {
  const auto partition = NodePartition::build(2, 2);
  const RbfKernel kernel(KernelFamily::MQ, 0.3);
  CHECK_THROWS_AS(assemble(example2(), partition, kernel, gauss_legendre(8, 0.0, 1.0)), std::invalid_argument);
}

TEST_CASE("interpolation matrix") {
  const auto partition = NodePartition::build(2, 2);
  const RbfKernel kernel(KernelFamily::MQ, 0.3);
  const auto a = interpolation_matrix(partition, kernel);
  CHECK(a == a.transposed());
  for (std::size_t k = 0; k < partition.size(); ++k) CHECK(a(k, k) == 0.3);
  // nodes (0, -1) and (0, 0)
  CHECK(a(0, 1) == doctest::Approx(1.04403065089).epsilon(1e-11));
}

TEST_CASE("interpolation reproduces random data") {
  const auto partition = NodePartition::build(10, 10);
  const RbfKernel kernel(KernelFamily::MQ, 0.3);
  const auto a = interpolation_matrix(partition, kernel);
  CHECK(a == a.transposed());
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> data(partition.size());
  for (double& d : data) d = u(rng);
  const auto report = solve(a, data);
  for (std::size_t j = 0; j < partition.size(); ++j) {
    double value = 0.0;
    for (std::size_t k = 0; k < partition.size(); ++k) {
      value += report.lambda[k] * kernel.eval(partition.node(j), partition.node(k));
    }
    CHECK(std::abs(value - data[j]) <= 1e-8);
  }
}
