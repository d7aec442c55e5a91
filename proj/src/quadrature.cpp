#include "fbmkl/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace fbmkl {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: points must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(points, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(points, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  if (points % 2 == 1) rule.nodes[points / 2] = 0.0;
  return rule;
}

QuadratureRule composite_gauss_legendre(std::span<const double> breakpoints,
                                        int points_per_panel) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("composite_gauss_legendre: need at least one panel");
  }
  const QuadratureRule base = gauss_legendre(points_per_panel);
  QuadratureRule rule;
  rule.nodes.reserve((breakpoints.size() - 1) * base.size());
  rule.weights.reserve(rule.nodes.capacity());
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p];
    const double b = breakpoints[p + 1];
    if (!(b > a)) throw std::invalid_argument("composite_gauss_legendre: breakpoints must increase");
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < base.size(); ++i) {
      rule.nodes.push_back(mid + half * base.nodes[i]);
      rule.weights.push_back(half * base.weights[i]);
    }
  }
  return rule;
}

QuadratureRule graded_unit_rule(int panels, int points_per_panel, double grading_ratio,
                                double innermost_width) {
  if (panels < 1 || points_per_panel < 2) {
    throw std::invalid_argument("graded_unit_rule: need >= 1 panel and >= 2 points per panel");
  }
  if (!(grading_ratio > 0.0 && grading_ratio < 1.0)) {
    throw std::invalid_argument("graded_unit_rule: grading ratio must lie in (0, 1)");
  }
  const double h = 1.0 / panels;
  std::vector<double> breaks{0.0};
  std::vector<double> graded;
  for (double w = h * grading_ratio; w > innermost_width; w *= grading_ratio) graded.push_back(w);
  breaks.insert(breaks.end(), graded.rbegin(), graded.rend());
  for (int p = 1; p <= panels; ++p) breaks.push_back(p * h);
  return composite_gauss_legendre(breaks, points_per_panel);
}

}  // namespace fbmkl
