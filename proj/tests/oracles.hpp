#pragma once
// Independent reference computations. None of these call into the library's
// quadrature, Bessel or Galerkin code.

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

namespace oracle {

inline double fbm_cov(double s, double t, double h) {
  const double a = 2.0 * h;
  return 0.5 * (std::pow(s, a) + std::pow(t, a) - std::pow(std::abs(s - t), a));
}

inline double freq(int n) { return (n - 0.5) * std::numbers::pi; }

// Adaptive Gauss-Kronrod on [a, b].
template <class F>
double integrate(F f, double a, double b, double tol = 1e-14) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 30, tol);
}

// Fixed 20-point Gauss panels on [a, b], geometrically graded toward both
// ends (ratio 0.25 down to a width of 1e-15) with 8 uniform panels between.
template <class F>
double graded_integrate(F f, double a, double b) {
  using rule = boost::math::quadrature::gauss<double, 20>;
  const double len = b - a;
  if (len <= 0.0) return 0.0;
  std::vector<double> left{0.0};
  for (double w = 1e-15; w < 0.125; w *= 4.0) left.push_back(w);
  std::vector<double> cuts = left;
  for (int i = 1; i <= 7; ++i) cuts.push_back(0.125 * i);
  for (auto it = left.rbegin(); it != left.rend(); ++it) cuts.push_back(1.0 - *it);
  double v = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    v += rule::integrate(f, a + len * cuts[i], a + len * cuts[i + 1]);
  }
  return v;
}

// 2 * int int R(x, y) sin(b_n x) sin(b_m y) dx dy, inner integral split at
// the kink y = x.
inline double galerkin_entry(double h, int n, int m) {
  const double bn = freq(n), bm = freq(m);
  auto inner = [&](double x) {
    auto g = [&](double y) { return fbm_cov(x, y, h) * std::sin(bm * y); };
    return (graded_integrate(g, 0.0, x) + graded_integrate(g, x, 1.0)) * std::sin(bn * x);
  };
  return 2.0 * graded_integrate(inner, 0.0, 1.0);
}

// Nystrom discretization on `points` midpoints: eigenvalues of R(t_i, t_j)/P,
// descending.
inline std::vector<double> nystrom_spectrum(double h, int points) {
  Eigen::MatrixXd k(points, points);
  for (int i = 0; i < points; ++i) {
    const double ti = (i + 0.5) / points;
    for (int j = 0; j < points; ++j) k(i, j) = fbm_cov(ti, (j + 0.5) / points, h) / points;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + points);
  return {out.rbegin(), out.rend()};
}

// int_0^1 f(t) sqrt(2) sin(b_n t) dt on fixed 30-point Gauss panels, each
// spanning at most half an oscillation of the fastest component.
template <class F>
double project_on_sine(F f, int n, double max_freq) {
  const int panels = 1 + static_cast<int>(max_freq / std::numbers::pi);
  double v = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = static_cast<double>(p) / panels, b = static_cast<double>(p + 1) / panels;
    v += boost::math::quadrature::gauss<double, 30>::integrate(
        [&](double t) { return f(t) * std::numbers::sqrt2 * std::sin(freq(n) * t); }, a, b);
  }
  return v;
}

inline double mu_hat(int n, double x) {
  return project_on_sine([&](double t) { return std::sin(x * t) / x; }, n, x + freq(n));
}

inline double mu_tilde(int n, double y) {
  return project_on_sine([&](double t) { return (1.0 - std::cos(y * t)) / y; }, n, y + freq(n));
}

inline double bessel_j(double nu, double x) { return boost::math::cyl_bessel_j(nu, x); }

// Brownian K-L eigenvalue.
inline double brownian_lambda(int n) { return 1.0 / (freq(n) * freq(n)); }

}  // namespace oracle
