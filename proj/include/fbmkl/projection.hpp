#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fbmkl/exec.hpp"
#include "fbmkl/expansion.hpp"
#include "fbmkl/galerkin.hpp"

namespace fbmkl {

/// Projection of sin(x t) / x onto sqrt(2) sin(b t), b = (n - 1/2) pi:
///   sqrt(2)/(2x) [sin(x - b)/(x - b) - sin(x + b)/(x + b)].
/// The x -> b limit is taken analytically.
double mu_hat(int n, double x);

/// Projection of (1 - cos(y t)) / y onto sqrt(2) sin(b t).
double mu_tilde(int n, double y);

/// How the cos-branch terms beyond the truncation index are treated.
///
/// The cos-branch projections decay only like 1/y_k, so its share of the
/// moment sums converges like K^{-2H}. For large k the element
/// (1 - cos(y_k t)) / y_k is the constant 1/y_k plus a component that
/// projects at O(1/y_k^2), so the whole tail acts on the sine basis as one
/// extra element, the constant function, with variance
///   sum_{k > K} var_w[k] / y_k^2 ~ pi c_H^2 sum_{k > K} y_k^{-1 - 2H}.
/// `lumped` appends that element as a final column; `none` truncates.
enum class Remainder { none, lumped };

/// Coefficients of the Bessel-series elements in the sine basis. Row n - 1
/// holds basis index n; column k - 1 holds series index k.
struct ProjectionTable {
  Eigen::MatrixXd mu_hat;    // N x K
  Eigen::MatrixXd mu_tilde;  // N x K
  Eigen::VectorXd var_z;     // K
  Eigen::VectorXd var_w;     // K
  /// Projections of the lumped remainder element (N entries) and its
  /// variance. Empty / zero when Remainder::none.
  Eigen::VectorXd remainder_coeff;
  double remainder_variance = 0.0;

  int sine_count() const { return static_cast<int>(mu_hat.rows()); }
  int terms() const { return static_cast<int>(mu_hat.cols()); }
  bool has_remainder() const { return remainder_coeff.size() > 0; }
};

ProjectionTable build_projection(const ExpansionSpec& spec, int sine_count,
                                 Remainder remainder = Remainder::lumped,
                                 Exec exec = Exec::parallel);

/// Variance of the lumped remainder of `spec`'s cos-branch beyond its last
/// term (Euler-Maclaurin on the leading-order envelope).
double cos_branch_remainder_variance(const ExpansionSpec& spec);

struct ProjectedMoment {
  double value = 0.0;
  double sin_branch = 0.0;
  double cos_branch = 0.0;  // includes the lumped remainder
  /// |contribution of the last tenth of the series terms plus the
  /// remainder| / |value|.
  double tail_fraction = 0.0;
  /// tail_fraction above 1%: K is too small for this (n, m).
  bool truncation_warning = false;
};

/// E[c_n c_m] = sum_k var_z mu_hat[n][k] mu_hat[m][k]
///            + var_w mu_tilde[n][k] mu_tilde[m][k]  (+ remainder).
/// 1-based n, m. For n == m this is the projected eigenvalue lambda_n.
ProjectedMoment projected_moment(int n, int m, const ProjectionTable& table);

/// All N x N moments at once.
Eigen::MatrixXd projected_moments(const ProjectionTable& table, Exec exec = Exec::parallel);

/// Diagonal lambda_1..lambda_N.
std::vector<double> projected_diagonal(const ProjectionTable& table);

AsymptoticFit projected_spectrum_fit(const ProjectionTable& table, FitRange range,
                                     double index_offset = 0.0);

}  // namespace fbmkl
