#include "slabrbf/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slabrbf {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto a = row(r);
    double sum = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) sum += a[c] * x[c];
    y[r] = sum;
  }
  return y;
}

double DenseMatrix::norm_1() const {
  std::vector<double> sums(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += std::abs((*this)(r, c));
  return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

double norm_2(std::span<const double> v) {
  // scaled to avoid overflow on large coefficient vectors
  double scale = 0.0;
  for (double e : v) scale = std::max(scale, std::abs(e));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double e : v) sum += (e / scale) * (e / scale);
  return scale * std::sqrt(sum);
}

}  // namespace slabrbf
