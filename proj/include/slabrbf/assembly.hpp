#pragma once

#include <vector>

#include "slabrbf/dense_matrix.hpp"
#include "slabrbf/grid.hpp"
#include "slabrbf/kernels.hpp"
#include "slabrbf/problem.hpp"
#include "slabrbf/quadrature.hpp"

namespace slabrbf {

/// Square collocation system; row p belongs to node p of the partition.
struct LinearSystem {
  DenseMatrix a;
  std::vector<double> b;
  std::vector<NodeClass> row_class;

  std::size_t size() const { return b.size(); }
};

/**
 * Kansa-style collocation of the transfer equation.
 *
 * A residual row at node p = (y_p, x_p) and column k reads
 *
 *   (x_p/t0) d/dy phi_k(p) + phi_k(p)
 *     - (omega/2) sum_l c_l P_l(x_p) int_{-1}^{1} P_l(xhat) phi_k(y_p, xhat) dxhat
 *
 * with b_p = S(y_p). Inflow rows are plain interpolation rows with the
 * boundary value on the right. The angular moments are computed once per
 * grid row y_i and reused by every node of that row.
 *
 * `scatter_rule` must be a rule on [-1, 1]; throws std::invalid_argument
 * otherwise.
 */
LinearSystem assemble(const SlabProblem& problem, const NodePartition& partition,
                      const RbfKernel& kernel, const QuadratureRule& scatter_rule);

/// A(j, k) = phi(|node_j - node_k|). Symmetric by construction.
DenseMatrix interpolation_matrix(const NodePartition& partition, const RbfKernel& kernel);

}  // namespace slabrbf
