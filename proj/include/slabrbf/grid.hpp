#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "slabrbf/kernels.hpp"

namespace slabrbf {

/// Which equation a collocation node carries.
///   Omega1    residual on y = 1, x >= 0
///   Omega2    residual on y = 0, x <= 0
///   Omega3    residual on x = -1, 0 < y < 1
///   Omega4    residual on x = +1, 0 < y < 1
///   Interior  residual strictly inside
///   Omega5Bc  inflow condition I(0, x) = I0(x), x > 0
///   Omega6Bc  inflow condition I(1, x) = I1(x), x < 0
enum class NodeClass { Omega1, Omega2, Omega3, Omega4, Interior, Omega5Bc, Omega6Bc };

inline constexpr std::array<NodeClass, 7> kAllNodeClasses = {
    NodeClass::Omega1,   NodeClass::Omega2,   NodeClass::Omega3,  NodeClass::Omega4,
    NodeClass::Interior, NodeClass::Omega5Bc, NodeClass::Omega6Bc};

std::string_view node_class_name(NodeClass cls);

/// True for the five classes whose rows enforce Res = 0.
inline bool is_residual_class(NodeClass cls) {
  return cls != NodeClass::Omega5Bc && cls != NodeClass::Omega6Bc;
}

/// x_j = (2j - n)/n spans [-1, 1]. Literal uses (2j - n)/(2n), which only
/// reaches [-1/2, 1/2]; kept for comparison runs.
enum class XGrid { Full, Literal };

/// Uniform tensor grid of centers (which double as collocation nodes) with
/// the equation class of every node. Node k = i*(n+1) + j sits at
/// (y_i, x_j), y_i = i/m.
class NodePartition {
 public:
  /// Throws std::invalid_argument unless m >= 2, n >= 2 and n is even.
  static NodePartition build(int m, int n, XGrid xgrid = XGrid::Full);

  int m() const { return m_; }
  int n() const { return n_; }
  XGrid xgrid() const { return xgrid_; }
  std::size_t size() const { return nodes_.size(); }

  const std::vector<Point>& nodes() const { return nodes_; }
  const Point& node(std::size_t k) const { return nodes_[k]; }
  NodeClass class_of(std::size_t k) const { return classes_[k]; }
  const std::vector<NodeClass>& classes() const { return classes_; }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(j);
  }

  std::size_t count(NodeClass cls) const;

 private:
  NodePartition(int m, int n, XGrid xgrid) : m_(m), n_(n), xgrid_(xgrid) {}

  int m_;
  int n_;
  XGrid xgrid_;
  std::vector<Point> nodes_;
  std::vector<NodeClass> classes_;
};

/// Classification of grid index (i, j) on an (m, n) grid.
NodeClass classify_node(int i, int j, int m, int n);

}  // namespace slabrbf
