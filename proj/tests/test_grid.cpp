#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "slabrbf/grid.hpp"

using namespace slabrbf;

namespace {

// Classification from coordinates alone: boundary edges by the sign of x,
// side edges by x = -1 / +1. Independent of the index-range logic.
NodeClass classify_by_coordinates(const Point& p) {
  if (p.y == 0.0) return p.x > 0.0 ? NodeClass::Omega5Bc : NodeClass::Omega2;
  if (p.y == 1.0) return p.x < 0.0 ? NodeClass::Omega6Bc : NodeClass::Omega1;
  if (p.x == -1.0) return NodeClass::Omega3;
  if (p.x == 1.0) return NodeClass::Omega4;
  return NodeClass::Interior;
}

std::map<NodeClass, std::size_t> enumerate_sizes(const NodePartition& partition) {
  std::map<NodeClass, std::size_t> sizes;
  for (const auto& node : partition.nodes()) ++sizes[classify_by_coordinates(node)];
  return sizes;
}

}  // namespace

TEST_CASE("m = n = 2 class sizes") {
  const auto partition = NodePartition::build(2, 2);
  CHECK(partition.size() == 9);
  const std::map<NodeClass, std::size_t> expected = {
      {NodeClass::Omega1, 2},   {NodeClass::Omega2, 2},   {NodeClass::Omega3, 1}, {NodeClass::Omega4, 1},
      {NodeClass::Interior, 1}, {NodeClass::Omega5Bc, 1}, {NodeClass::Omega6Bc, 1}};
  CHECK(enumerate_sizes(partition) == expected);
  for (auto cls : kAllNodeClasses) CHECK(partition.count(cls) == expected.at(cls));
}

TEST_CASE("m = n = 4 class sizes") {
  const auto partition = NodePartition::build(4, 4);
  const std::map<NodeClass, std::size_t> expected = {
      {NodeClass::Omega1, 3},   {NodeClass::Omega2, 3},   {NodeClass::Omega3, 3}, {NodeClass::Omega4, 3},
      {NodeClass::Interior, 9}, {NodeClass::Omega5Bc, 2}, {NodeClass::Omega6Bc, 2}};
  CHECK(enumerate_sizes(partition) == expected);
  CHECK(partition.size() == 25);
}

TEST_CASE("benchmark grid size") {
  CHECK(NodePartition::build(20, 20).size() == 441);
  CHECK(NodePartition::build(24, 24).size() == 625);
}

TEST_CASE("partition property over the sweep") {
  for (int m = 2; m <= 24; m += 2) {
    for (int n = 2; n <= 24; n += 2) {
      const auto p = NodePartition::build(m, n);
      REQUIRE(p.size() == static_cast<std::size_t>((m + 1) * (n + 1)));
      std::set<std::pair<double, double>> distinct;
      for (std::size_t k = 0; k < p.size(); ++k) {
        distinct.insert({p.node(k).y, p.node(k).x});
        CHECK(p.class_of(k) == classify_by_coordinates(p.node(k)));
      }
      CHECK(distinct.size() == p.size());
      CHECK(p.count(NodeClass::Omega1) == static_cast<std::size_t>(n / 2 + 1));
      CHECK(p.count(NodeClass::Omega2) == static_cast<std::size_t>(n / 2 + 1));
      CHECK(p.count(NodeClass::Omega3) == static_cast<std::size_t>(m - 1));
      CHECK(p.count(NodeClass::Omega4) == static_cast<std::size_t>(m - 1));
      CHECK(p.count(NodeClass::Interior) == static_cast<std::size_t>((m - 1) * (n - 1)));
      CHECK(p.count(NodeClass::Omega5Bc) == static_cast<std::size_t>(n / 2));
      CHECK(p.count(NodeClass::Omega6Bc) == static_cast<std::size_t>(n / 2));
    }
  }
}

TEST_CASE("corner assignments") {
  const auto p = NodePartition::build(6, 8);
  CHECK(p.class_of(p.index(0, 0)) == NodeClass::Omega2);   // (0, -1)
  CHECK(p.class_of(p.index(6, 8)) == NodeClass::Omega1);   // (1, +1)
  CHECK(p.class_of(p.index(0, 8)) == NodeClass::Omega5Bc); // (0, +1)
  CHECK(p.class_of(p.index(6, 0)) == NodeClass::Omega6Bc); // (1, -1)
  // x = 0 on the edges carries a residual
  CHECK(p.class_of(p.index(0, 4)) == NodeClass::Omega2);
  CHECK(p.class_of(p.index(6, 4)) == NodeClass::Omega1);
}

TEST_CASE("node coordinates and ordering") {
  const auto p = NodePartition::build(4, 6);
  CHECK(p.node(0).y == 0.0);
  CHECK(p.node(0).x == -1.0);
  CHECK(p.node(6).x == 1.0);
  CHECK(p.node(7).y == 0.25);
  CHECK(p.node(p.index(4, 3)).y == 1.0);
  CHECK(p.node(p.index(4, 3)).x == 0.0);

  const auto literal = NodePartition::build(4, 6, XGrid::Literal);
  CHECK(literal.node(0).x == -0.5);
  CHECK(literal.node(6).x == 0.5);
  CHECK(literal.classes() == p.classes());
}

TEST_CASE("invalid grid sizes") {
  CHECK_THROWS_AS(NodePartition::build(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(NodePartition::build(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(NodePartition::build(4, 0), std::invalid_argument);
  CHECK_THROWS_WITH(NodePartition::build(4, 21), doctest::Contains("even"));
}
