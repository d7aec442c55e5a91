#pragma once

namespace fbmkl {

/// Hurst exponent of a standard fractional Brownian motion on [0, 1],
/// together with the constant c_H^2 = Gamma(1 + 2H) sin(pi H) / pi that
/// scales the Bessel-series variances.
class HurstParams {
 public:
  /// Throws DomainError unless 0 < h < 1.
  explicit HurstParams(double h);

  double h() const { return h_; }
  double c_h_sq() const { return c_h_sq_; }
  /// Exponent 2H of the covariance power terms.
  double alpha() const { return 2.0 * h_; }
  /// Asymptotic eigenvalue decay exponent 2H + 1.
  double decay_exponent() const { return 2.0 * h_ + 1.0; }

 private:
  double h_;
  double c_h_sq_;
};

/// R(s, t) = (s^2H + t^2H - |s - t|^2H) / 2 for s, t in [0, 1].
double fbm_covariance(double s, double t, const HurstParams& params);

/// Frequency (n - 1/2) pi of the n-th sine basis function, n >= 1.
double sine_frequency(int n);

/// sqrt(2) sin((n - 1/2) pi t). Orthonormal on [0, 1], n >= 1.
double sine_basis(int n, double t);

}  // namespace fbmkl
