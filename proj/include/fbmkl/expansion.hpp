#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fbmkl/exec.hpp"
#include "fbmkl/kernel.hpp"

namespace fbmkl {

/// Truncated Dzhaparidze-van Zanten series
///   B_t = sum_n z_n sin(x_n t) / x_n + w_n (1 - cos(y_n t)) / y_n
/// with x_n the zeros of J_{-H}, y_n the zeros of J_{1-H}, and independent
/// centered Gaussians z_n, w_n of variances var_z, var_w.
struct ExpansionSpec {
  HurstParams params;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> var_z;
  std::vector<double> var_w;

  int terms() const { return static_cast<int>(x.size()); }
};

/// var_z[n] = 2 c_H^2 / (x_n^2H J_{1-H}(x_n)^2),
/// var_w[n] = 2 c_H^2 / (y_n^2H J_{-H}(y_n)^2).
ExpansionSpec build_expansion(const HurstParams& params, int terms);

inline constexpr int kCovarianceTerms = 2000;
inline constexpr int kSamplingTerms = 500;

/// One realization on `grid`. The generator is std::mt19937_64 seeded with
/// `seed`; standard normals are drawn for z_1..z_K first, then w_1..w_K.
std::vector<double> sample_path(const ExpansionSpec& spec, std::span<const double> grid,
                                std::uint64_t seed);

/// Realizations for seeds first_seed, first_seed + 1, ... as the rows of an
/// M x P matrix. Row i equals sample_path(spec, grid, first_seed + i).
Eigen::MatrixXd sample_paths(const ExpansionSpec& spec, std::span<const double> grid,
                             int count, std::uint64_t first_seed,
                             Exec exec = Exec::parallel);

/// Second moment E[B_s B_t] of the truncated series.
double reconstruct_covariance(const ExpansionSpec& spec, double s, double t);

}  // namespace fbmkl
