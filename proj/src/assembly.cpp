#include "slabrbf/assembly.hpp"

#include <stdexcept>

#include "slabrbf/legendre.hpp"

namespace slabrbf {

namespace {

void check_scatter_rule(const QuadratureRule& rule) {
  if (rule.a != -1.0 || rule.b != 1.0 || rule.size() == 0) {
    throw std::invalid_argument("scattering rule must span [-1, 1]");
  }
}

// moments(l, k) = int_{-1}^{1} P_l(xhat) phi(|(y, xhat) - center_k|) dxhat
DenseMatrix angular_moments(double y, const std::vector<Point>& centers, const RbfKernel& kernel,
                            const QuadratureRule& rule, int order) {
  DenseMatrix moments(static_cast<std::size_t>(order) + 1, centers.size());
  std::vector<double> p(static_cast<std::size_t>(order) + 2);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const Point at{y, rule.nodes[q]};
    legendre_sweep(order, rule.nodes[q], p);
    for (std::size_t k = 0; k < centers.size(); ++k) {
      const double weighted = rule.weights[q] * kernel.eval(at, centers[k]);
      for (int l = 0; l <= order; ++l) moments(l, k) += p[l] * weighted;
    }
  }
  return moments;
}

}  // namespace

LinearSystem assemble(const SlabProblem& problem, const NodePartition& partition,
                      const RbfKernel& kernel, const QuadratureRule& scatter_rule) {
  problem.validate();
  check_scatter_rule(scatter_rule);

  const std::size_t size = partition.size();
  const auto& centers = partition.nodes();
  const auto& coeffs = problem.phase.coeffs();
  const int order = problem.phase.order();

  LinearSystem system{DenseMatrix(size, size), std::vector<double>(size, 0.0), partition.classes()};
  std::vector<double> px(static_cast<std::size_t>(order) + 2);
  for (int i = 0; i <= partition.m(); ++i) {
    const double y = centers[partition.index(i, 0)].y;
    const DenseMatrix moments = angular_moments(y, centers, kernel, scatter_rule, order);

    for (int j = 0; j <= partition.n(); ++j) {
      const std::size_t row_index = partition.index(i, j);
      const Point& node = centers[row_index];
      auto row = system.a.row(row_index);

      switch (partition.class_of(row_index)) {
        case NodeClass::Omega5Bc:
          for (std::size_t k = 0; k < size; ++k) row[k] = kernel.eval(node, centers[k]);
          system.b[row_index] = problem.i0(node.x);
          continue;
        case NodeClass::Omega6Bc:
          for (std::size_t k = 0; k < size; ++k) row[k] = kernel.eval(node, centers[k]);
          system.b[row_index] = problem.i1(node.x);
          continue;
        default:
          break;
      }

      legendre_sweep(order, node.x, px);
      const double transport = node.x / problem.t0;
      const double half_albedo = 0.5 * problem.omega;
      for (std::size_t k = 0; k < size; ++k) {
        double scatter = 0.0;
        for (int l = 0; l <= order; ++l) scatter += coeffs[l] * px[l] * moments(l, k);
        row[k] = transport * kernel.eval_dy(node, centers[k]) + kernel.eval(node, centers[k]) -
                 half_albedo * scatter;
      }
      system.b[row_index] = problem.source(node.y);
    }
  }
  return system;
}

DenseMatrix interpolation_matrix(const NodePartition& partition, const RbfKernel& kernel) {
  const std::size_t size = partition.size();
  DenseMatrix a(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    a(j, j) = kernel.eval(0.0);
    for (std::size_t k = j + 1; k < size; ++k) {
      const double value = kernel.eval(partition.node(j), partition.node(k));
      a(j, k) = value;
      a(k, j) = value;
    }
  }
  return a;
}

}  // namespace slabrbf
