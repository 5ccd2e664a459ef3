#include "slabrbf/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace slabrbf {

KernelFamily parse_kernel_family(std::string_view name) {
  if (name == "mq") return KernelFamily::MQ;
  if (name == "imq") return KernelFamily::IMQ;
  if (name == "ga") return KernelFamily::GA;
  if (name == "iq") return KernelFamily::IQ;
  throw std::invalid_argument("unknown kernel family '" + std::string(name) +
                              "' (expected mq, imq, ga or iq)");
}

std::string_view kernel_family_name(KernelFamily family) {
  switch (family) {
    case KernelFamily::MQ: return "mq";
    case KernelFamily::IMQ: return "imq";
    case KernelFamily::GA: return "ga";
    case KernelFamily::IQ: return "iq";
  }
  return "?";
}

RbfKernel::RbfKernel(KernelFamily family, double c) : family_(family), c_(c), c2_(c * c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("shape parameter c must be positive and finite");
  }
}

double RbfKernel::eval_squared(double r2) const {
  switch (family_) {
    case KernelFamily::MQ: return std::sqrt(r2 + c2_);
    case KernelFamily::IMQ: return 1.0 / std::sqrt(r2 + c2_);
    case KernelFamily::GA: return std::exp(-c_ * r2);
    case KernelFamily::IQ: return 1.0 / (r2 + c2_);
  }
  return 0.0;
}

double RbfKernel::eval_dy(const Point& point, const Point& center) const {
  const double dy = point.y - center.y;
  const double r2 = squared_distance(point, center);
  const double s = r2 + c2_;
  switch (family_) {
    case KernelFamily::MQ: return dy / std::sqrt(s);
    case KernelFamily::IMQ: return -dy / (s * std::sqrt(s));
    case KernelFamily::GA: return -2.0 * c_ * dy * std::exp(-c_ * r2);
    case KernelFamily::IQ: return -2.0 * dy / (s * s);
  }
  return 0.0;
}

}  // namespace slabrbf
