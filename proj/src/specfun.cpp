#include "fbmkl/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "fbmkl/error.hpp"

namespace fbmkl {
namespace detail {

double bessel_j_series(double nu, double x) {
  // Ascending series in extended precision; below the crossover the largest
  // term is ~5e5 times the result, well inside the 64-bit mantissa.
  const long double half = 0.5L * x;
  const long double q = half * half;
  const long double lnu = nu;
  long double term = std::pow(half, lnu) / std::tgamma(lnu + 1.0L);
  long double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= -q / (k * (k + lnu));
    sum += term;
    if (k > half && std::abs(term) <= 1e-21L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

double bessel_j_hankel(double nu, double x) {
  // J = sqrt(2 / (pi x)) (P cos chi - Q sin chi), chi = x - (nu/2 + 1/4) pi,
  // with a_k = prod_{j<=k} (4nu^2 - (2j-1)^2) / (k! (8x)^k) alternating
  // between P (even k) and Q (odd k). Summed until the terms stop shrinking.
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = a * (mu - odd * odd) / (8.0 * k * x);
    if (next == 0.0 || std::abs(next) >= std::abs(a)) break;
    a = next;
    switch (k % 4) {
      case 1: q += a; break;
      case 2: p -= a; break;
      case 3: q -= a; break;
      default: p += a; break;
    }
    if (std::abs(a) < 1e-17) break;
  }
  // cos(x - phi) expanded so the large argument is reduced exactly by libm.
  const double phi = (0.5 * nu + 0.25) * std::numbers::pi;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cos_chi = cx * std::cos(phi) + sx * std::sin(phi);
  const double sin_chi = sx * std::cos(phi) - cx * std::sin(phi);
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace detail

namespace {

double bessel_j_unchecked(double nu, double x) {
  return x < detail::kBesselCrossover ? detail::bessel_j_series(nu, x)
                                      : detail::bessel_j_hankel(nu, x);
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(nu > -1.0 && nu < 1.0)) throw DomainError("bessel_j: order must lie in (-1, 1)");
  if (!(x > 0.0)) throw DomainError("bessel_j: argument must be positive");
  return bessel_j_unchecked(nu, x);
}

double BesselZeros::residual(int n) const { return zeros.at(n - 1) - n * std::numbers::pi; }

double BesselZeros::asymptotic_shift() const {
  if (zeros.size() < 2) throw DomainError("asymptotic_shift: need at least two zeros");
  const int n = static_cast<int>(zeros.size());
  return n * residual(n) - (n - 1) * residual(n - 1);
}

BesselZeros bessel_zeros(double nu, int count) {
  if (!(nu > -1.0 && nu < 1.0)) throw DomainError("bessel_zeros: order must lie in (-1, 1)");
  if (count < 1) throw DomainError("bessel_zeros: count must be >= 1");

  constexpr double kResidualTolerance = 1e-12;
  constexpr std::uintmax_t kIterationBudget = 200;
  const auto f = [nu](double x) { return bessel_j_unchecked(nu, x); };

  BesselZeros out;
  out.nu = nu;
  out.zeros.reserve(count);
  for (int n = 1; n <= count; ++n) {
    const double guess = (n + 0.5 * nu - 0.25) * std::numbers::pi;
    const double lo = std::max(guess - 0.5 * std::numbers::pi, 1e-10);
    const double hi = guess + 0.5 * std::numbers::pi;
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0 || fhi == 0.0 || std::signbit(flo) == std::signbit(fhi)) {
      throw ConvergenceError("bessel_zeros: no sign change bracketing zero " +
                             std::to_string(n) + " of J_" + std::to_string(nu));
    }
    std::uintmax_t iterations = kIterationBudget;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(), iterations);
    if (iterations >= kIterationBudget) {
      throw ConvergenceError("bessel_zeros: refinement budget exceeded at zero " +
                             std::to_string(n));
    }
    const double z = std::abs(f(a)) <= std::abs(f(b)) ? a : b;
    if (std::abs(f(z)) > kResidualTolerance) {
      throw ConvergenceError("bessel_zeros: residual above tolerance at zero " +
                             std::to_string(n));
    }
    if (!out.zeros.empty() && !(z > out.zeros.back())) {
      throw ConvergenceError("bessel_zeros: zeros not strictly increasing at " +
                             std::to_string(n));
    }
    out.zeros.push_back(z);
  }
  return out;
}

}  // namespace fbmkl
