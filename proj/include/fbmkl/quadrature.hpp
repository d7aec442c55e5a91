#pragma once

#include <span>
#include <vector>

namespace fbmkl {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule with `points` nodes on [-1, 1].
QuadratureRule gauss_legendre(int points);

/// Gauss-Legendre panels between consecutive (increasing) breakpoints.
QuadratureRule composite_gauss_legendre(std::span<const double> breakpoints,
                                        int points_per_panel);

/// Composite rule on [0, 1] for integrands carrying a u^a endpoint factor at
/// u = 0: `panels` uniform panels, with the first one split geometrically
/// toward 0 (ratio `grading_ratio`) until the innermost panel is narrower
/// than `innermost_width`.
QuadratureRule graded_unit_rule(int panels, int points_per_panel,
                                double grading_ratio = 0.15,
                                double innermost_width = 1e-20);

}  // namespace fbmkl
