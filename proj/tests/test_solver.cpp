#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "slabrbf/solver.hpp"

using namespace slabrbf;

namespace {

DenseMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = u(rng);
  return a;
}

// ||A^{-1}||_1 from the explicit inverse, column by column.
double exact_inverse_norm_1(const DenseMatrix& a) {
  const LuFactorization lu(a);
  double best = 0.0;
  for (std::size_t c = 0; c < a.rows(); ++c) {
    std::vector<double> e(a.rows(), 0.0);
    e[c] = 1.0;
    const auto column = lu.solve(e);
    double sum = 0.0;
    for (double v : column) sum += std::abs(v);
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace

TEST_CASE("identity system") {
  const std::vector<double> b = {3.0, -1.5, 0.25, 8.0};
  const auto report = solve(DenseMatrix::identity(4), b);
  CHECK(report.lambda == b);
  CHECK(report.relative_residual <= 1e-15);
  CHECK(report.condition_estimate == doctest::Approx(1.0));
}

TEST_CASE("diagonal system") {
  DenseMatrix a(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = 4.0;
  const std::vector<double> b = {2.0, 8.0};
  const auto report = solve(a, b);
  CHECK(report.lambda[0] == 1.0);
  CHECK(report.lambda[1] == 2.0);
  CHECK(report.condition_estimate == doctest::Approx(2.0));
}

TEST_CASE("singular systems are rejected") {
  DenseMatrix dup(3, 3);
  const double rows[3][3] = {{1, 2, 3}, {4, 5, 6}, {1, 2, 3}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) dup(r, c) = rows[r][c];
  CHECK_THROWS_AS(solve(dup, std::vector<double>{1, 2, 3}), SingularMatrixError);
  CHECK_THROWS_AS(solve(DenseMatrix(4, 4), std::vector<double>(4, 1.0)), SingularMatrixError);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(LuFactorization(DenseMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(solve(DenseMatrix::identity(3), std::vector<double>(2, 1.0)), std::invalid_argument);
}

TEST_CASE("random systems solve to small residual") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 2u, 7u, 40u, 120u}) {
    const auto a = random_matrix(n, rng);
    std::vector<double> x(n);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double& v : x) v = u(rng);
    const auto b = a.multiply(x);
    const auto report = solve(a, b);
    CHECK(report.relative_residual <= 1e-12);
    for (std::size_t i = 0; i < n; ++i) CHECK(report.lambda[i] == doctest::Approx(x[i]).epsilon(1e-8));
  }
}

TEST_CASE("transposed solve") {
  std::mt19937_64 rng(9);
  const auto a = random_matrix(25, rng);
  std::vector<double> b(25);
  std::iota(b.begin(), b.end(), -12.0);
  const LuFactorization lu(a);
  const auto x = lu.solve_transposed(b);
  const auto back = a.transposed().multiply(x);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(back[i] == doctest::Approx(b[i]).epsilon(1e-10));
}

TEST_CASE("row permutation does not change the solution") {
  std::mt19937_64 rng(13);
  const std::size_t n = 60;
  const auto a = random_matrix(n, rng);
  std::vector<double> b(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double& v : b) v = u(rng);
  const auto base = solve(a, b);

  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    DenseMatrix pa(n, n);
    std::vector<double> pb(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::copy(a.row(order[r]).begin(), a.row(order[r]).end(), pa.row(r).begin());
      pb[r] = b[order[r]];
    }
    const auto permuted = solve(pa, pb);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(permuted.lambda[i] - base.lambda[i]) <= 1e-10);
  }
}

TEST_CASE("condition estimate is a tight lower bound") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(30, rng);
    const LuFactorization lu(a);
    const double estimate = lu.inverse_norm_1_estimate();
    const double exact = exact_inverse_norm_1(a);
    CHECK(estimate <= exact * (1.0 + 1e-10));
    CHECK(estimate >= 0.3 * exact);
  }
}

TEST_CASE("warnings") {
  SolveReport report;
  report.condition_estimate = 10.0;
  report.relative_residual = 1e-14;
  CHECK(solve_warnings(report).empty());
  report.condition_estimate = 5e12;
  report.relative_residual = 3e-8;
  const auto warnings = solve_warnings(report);
  REQUIRE(warnings.size() == 2);
  CHECK(warnings[0].find("ill-conditioned") != std::string::npos);
  CHECK(warnings[1].find("relative residual") != std::string::npos);
}
