#pragma once

#include <string>
#include <string_view>

namespace slabrbf {

/// A point of the (depth, direction cosine) plane.
struct Point {
  double y = 0.0;
  double x = 0.0;
};

/// Squared Euclidean distance in the (y, x) plane.
inline double squared_distance(const Point& a, const Point& b) {
  const double dy = a.y - b.y;
  const double dx = a.x - b.x;
  return dy * dy + dx * dx;
}

enum class KernelFamily { MQ, IMQ, GA, IQ };

/// Parses "mq", "imq", "ga" or "iq". Throws std::invalid_argument otherwise.
KernelFamily parse_kernel_family(std::string_view name);
std::string_view kernel_family_name(KernelFamily family);

/**
 * Infinitely smooth radial kernel with shape parameter c.
 *
 *   MQ   sqrt(r^2 + c^2)
 *   IMQ  1 / sqrt(r^2 + c^2)
 *   GA   exp(-c r^2)
 *   IQ   1 / (r^2 + c^2)
 *
 * Note the Gaussian uses c as a plain multiplier of r^2, not (c r)^2.
 */
class RbfKernel {
 public:
  /// Throws std::invalid_argument unless c is finite and positive.
  RbfKernel(KernelFamily family, double c);

  KernelFamily family() const { return family_; }
  double shape() const { return c_; }

  /// phi(r) for r >= 0.
  double eval(double r) const { return eval_squared(r * r); }

  /// phi evaluated from the squared distance r^2; avoids a sqrt for IQ and GA.
  double eval_squared(double r2) const;

  /// d/dy phi(|point - center|), closed form.
  double eval_dy(const Point& point, const Point& center) const;

  /// phi(|point - center|).
  double eval(const Point& point, const Point& center) const {
    return eval_squared(squared_distance(point, center));
  }

 private:
  KernelFamily family_;
  double c_;
  double c2_;
};

}  // namespace slabrbf
