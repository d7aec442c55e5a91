#pragma once

#include <vector>

namespace fbmkl {

/// Bessel function of the first kind J_nu(x) for real order -1 < nu < 1 and
/// x > 0. Throws DomainError outside that range.
double bessel_j(double nu, double x);

namespace detail {
// Unchecked evaluators, valid for nu > -1. Exposed for the crossover tests.
double bessel_j_series(double nu, double x);
double bessel_j_hankel(double nu, double x);
inline constexpr double kBesselCrossover = 17.0;
}  // namespace detail

/// The first positive zeros of J_nu, ascending.
struct BesselZeros {
  double nu = 0.0;
  std::vector<double> zeros;

  std::size_t size() const { return zeros.size(); }
  double operator[](std::size_t i) const { return zeros[i]; }

  /// x_n - n pi for the 1-based index n.
  double residual(int n) const;
  /// Limit of x_n - n pi, extrapolated from the last two residuals
  /// assuming an O(1/n) approach. Needs at least two zeros.
  double asymptotic_shift() const;
};

/// First `count` positive zeros of J_nu, -1 < nu < 1. Each is bracketed
/// around (n + nu/2 - 1/4) pi +- pi/2 and refined until |J_nu| <= 1e-12.
/// Throws ConvergenceError if a bracket has no sign change or refinement
/// stalls.
BesselZeros bessel_zeros(double nu, int count);

}  // namespace fbmkl
