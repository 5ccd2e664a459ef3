#include "slabrbf/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slabrbf {

std::string_view node_class_name(NodeClass cls) {
  switch (cls) {
    case NodeClass::Omega1: return "omega1";
    case NodeClass::Omega2: return "omega2";
    case NodeClass::Omega3: return "omega3";
    case NodeClass::Omega4: return "omega4";
    case NodeClass::Interior: return "interior";
    case NodeClass::Omega5Bc: return "omega5_bc";
    case NodeClass::Omega6Bc: return "omega6_bc";
  }
  return "?";
}

NodeClass classify_node(int i, int j, int m, int n) {
  const int mid = n / 2;
  // The y edges take the corners; x = 0 on an edge carries a residual since
  // the inflow data are only defined for x != 0.
  if (i == 0) return j <= mid ? NodeClass::Omega2 : NodeClass::Omega5Bc;
  if (i == m) return j >= mid ? NodeClass::Omega1 : NodeClass::Omega6Bc;
  if (j == 0) return NodeClass::Omega3;
  if (j == n) return NodeClass::Omega4;
  return NodeClass::Interior;
}

NodePartition NodePartition::build(int m, int n, XGrid xgrid) {
  if (m < 2) throw std::invalid_argument("m must be at least 2, got " + std::to_string(m));
  if (n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
  if (n % 2 != 0) throw std::invalid_argument("n must be even, got " + std::to_string(n));

  NodePartition partition(m, n, xgrid);
  const std::size_t total = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1);
  partition.nodes_.reserve(total);
  partition.classes_.reserve(total);
  const double x_denominator = xgrid == XGrid::Full ? n : 2.0 * n;
  for (int i = 0; i <= m; ++i) {
    const double y = static_cast<double>(i) / m;
    for (int j = 0; j <= n; ++j) {
      const double x = (2.0 * j - n) / x_denominator;
      partition.nodes_.push_back({y, x});
      partition.classes_.push_back(classify_node(i, j, m, n));
    }
  }
  return partition;
}

std::size_t NodePartition::count(NodeClass cls) const {
  return static_cast<std::size_t>(std::count(classes_.begin(), classes_.end(), cls));
}

}  // namespace slabrbf
