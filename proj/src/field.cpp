#include "slabrbf/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

#include "slabrbf/legendre.hpp"

namespace slabrbf {

namespace {

void check_domain(double y, double x) {
  if (!(y >= 0.0 && y <= 1.0 && x >= -1.0 && x <= 1.0)) {
    throw std::out_of_range(fmt::format("point (y={}, x={}) lies outside [0,1] x [-1,1]", y, x));
  }
}

}  // namespace

SolvedField::SolvedField(std::vector<double> lambda, RbfKernel kernel, std::vector<Point> centers,
                         SlabProblem problem)
    : lambda_(std::move(lambda)),
      kernel_(kernel),
      centers_(std::move(centers)),
      problem_(std::move(problem)) {
  if (lambda_.size() != centers_.size()) {
    throw std::invalid_argument("coefficient count must equal center count");
  }
}

double SolvedField::intensity(double y, double x) const {
  check_domain(y, x);
  const Point at{y, x};
  double sum = 0.0;
  for (std::size_t k = 0; k < centers_.size(); ++k) sum += lambda_[k] * kernel_.eval(at, centers_[k]);
  return sum;
}

double SolvedField::intensity_dy(double y, double x) const {
  check_domain(y, x);
  const Point at{y, x};
  double sum = 0.0;
  for (std::size_t k = 0; k < centers_.size(); ++k) {
    sum += lambda_[k] * kernel_.eval_dy(at, centers_[k]);
  }
  return sum;
}

std::vector<double> SolvedField::scattering(double y, std::span<const double> xs,
                                            const QuadratureRule& scatter_rule) const {
  const auto& coeffs = problem_.phase.coeffs();
  const int order = problem_.phase.order();
  std::vector<double> p(static_cast<std::size_t>(order) + 2);

  // Legendre moments of the angular profile I_N(y, .)
  std::vector<double> moments(static_cast<std::size_t>(order) + 1, 0.0);
  for (std::size_t q = 0; q < scatter_rule.size(); ++q) {
    const double profile = intensity(y, scatter_rule.nodes[q]);
    legendre_sweep(order, scatter_rule.nodes[q], p);
    for (int l = 0; l <= order; ++l) moments[l] += scatter_rule.weights[q] * p[l] * profile;
  }

  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    legendre_sweep(order, xs[i], p);
    double sum = 0.0;
    for (int l = 0; l <= order; ++l) sum += coeffs[l] * p[l] * moments[l];
    out[i] = 0.5 * problem_.omega * sum;
  }
  return out;
}

std::vector<double> SolvedField::residual_row(double y, std::span<const double> xs,
                                              const QuadratureRule& scatter_rule) const {
  for (double x : xs) check_domain(y, x);
  std::vector<double> out = scattering(y, xs, scatter_rule);
  const double source = problem_.source(y);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    out[i] = (x / problem_.t0) * intensity_dy(y, x) + intensity(y, x) - source - out[i];
  }
  return out;
}

double SolvedField::residual(double y, double x, const QuadratureRule& scatter_rule) const {
  const double xs[] = {x};
  return residual_row(y, xs, scatter_rule).front();
}

double SolvedField::flux(double y, const QuadratureRule& rule) const {
  if (rule.a != 0.0 || rule.b != 1.0) throw std::invalid_argument("flux rule must span [0, 1]");
  return 2.0 * integrate(rule, [&](double x) { return intensity(y, x) * x; });
}

double SolvedField::residual_norm(int grid_x, int grid_y, const QuadratureRule& scatter_rule) const {
  const QuadratureRule in_x = composite_simpson(grid_x, -1.0, 1.0);
  const QuadratureRule in_y = composite_simpson(grid_y, 0.0, 1.0);
  return integrate(in_y, [&](double y) {
    const std::vector<double> row = residual_row(y, in_x.nodes, scatter_rule);
    double sum = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) sum += in_x.weights[i] * row[i] * row[i];
    return sum;
  });
}

CollocationFit collocation_fit(const SolvedField& field, const NodePartition& partition,
                               const QuadratureRule& scatter_rule) {
  CollocationFit fit;
  const SlabProblem& problem = field.problem();
  for (int i = 0; i <= partition.m(); ++i) {
    const double y = partition.node(partition.index(i, 0)).y;
    std::vector<double> residual_xs;
    for (int j = 0; j <= partition.n(); ++j) {
      const std::size_t k = partition.index(i, j);
      const Point& node = partition.node(k);
      switch (partition.class_of(k)) {
        case NodeClass::Omega5Bc:
          fit.max_boundary_mismatch = std::max(
              fit.max_boundary_mismatch, std::abs(field.intensity(y, node.x) - problem.i0(node.x)));
          break;
        case NodeClass::Omega6Bc:
          fit.max_boundary_mismatch = std::max(
              fit.max_boundary_mismatch, std::abs(field.intensity(y, node.x) - problem.i1(node.x)));
          break;
        default:
          residual_xs.push_back(node.x);
          break;
      }
    }
    for (double r : field.residual_row(y, residual_xs, scatter_rule)) {
      fit.max_residual = std::max(fit.max_residual, std::abs(r));
    }
  }
  return fit;
}

}  // namespace slabrbf
