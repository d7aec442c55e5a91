#include "fbmkl/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fbmkl/error.hpp"

namespace fbmkl {

HurstParams::HurstParams(double h) : h_(h) {
  if (!(h > 0.0 && h < 1.0)) {
    throw DomainError("hurst exponent must lie in (0, 1), got " + std::to_string(h));
  }
  c_h_sq_ = std::tgamma(1.0 + 2.0 * h) * std::sin(std::numbers::pi * h) / std::numbers::pi;
}

double fbm_covariance(double s, double t, const HurstParams& params) {
  if (!(s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0)) {
    throw DomainError("fbm_covariance: times must lie in [0, 1]");
  }
  const double a = params.alpha();
  return 0.5 * (std::pow(s, a) + std::pow(t, a) - std::pow(std::abs(s - t), a));
}

double sine_frequency(int n) { return (n - 0.5) * std::numbers::pi; }

double sine_basis(int n, double t) {
  return std::numbers::sqrt2 * std::sin(sine_frequency(n) * t);
}

}  // namespace fbmkl
