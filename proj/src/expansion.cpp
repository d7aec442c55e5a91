#include "fbmkl/expansion.hpp"

#include <cmath>
#include <random>

#include "fbmkl/error.hpp"
#include "fbmkl/specfun.hpp"

namespace fbmkl {

ExpansionSpec build_expansion(const HurstParams& params, int terms) {
  if (terms < 1) throw DomainError("build_expansion: terms must be >= 1");
  const double h = params.h();
  const double two_c_sq = 2.0 * params.c_h_sq();

  ExpansionSpec spec{params, bessel_zeros(-h, terms).zeros, bessel_zeros(1.0 - h, terms).zeros,
                     std::vector<double>(terms), std::vector<double>(terms)};
  for (int n = 0; n < terms; ++n) {
    const double jx = bessel_j(1.0 - h, spec.x[n]);
    const double jy = bessel_j(-h, spec.y[n]);
    spec.var_z[n] = two_c_sq / (std::pow(spec.x[n], 2.0 * h) * jx * jx);
    spec.var_w[n] = two_c_sq / (std::pow(spec.y[n], 2.0 * h) * jy * jy);
  }
  return spec;
}

namespace {

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw DomainError("sample grid must be non-empty");
  for (double t : grid) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("sample grid times must lie in [0, 1]");
  }
}

// Series elements evaluated on the grid, one row per time.
struct GridBasis {
  Eigen::MatrixXd sin_part;  // sin(x_k t) / x_k
  Eigen::MatrixXd cos_part;  // (1 - cos(y_k t)) / y_k
};

GridBasis grid_basis(const ExpansionSpec& spec, std::span<const double> grid) {
  const int p = static_cast<int>(grid.size());
  const int k = spec.terms();
  GridBasis basis{Eigen::MatrixXd(p, k), Eigen::MatrixXd(p, k)};
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < k; ++j) {
      basis.sin_part(i, j) = std::sin(spec.x[j] * grid[i]) / spec.x[j];
      basis.cos_part(i, j) = (1.0 - std::cos(spec.y[j] * grid[i])) / spec.y[j];
    }
  }
  return basis;
}

// Draws z_1..z_K, then w_1..w_K, and writes the path into `out`.
void draw_path(const ExpansionSpec& spec, const GridBasis& basis, std::uint64_t seed,
               double* out) {
  const int k = spec.terms();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> z(k);
  std::vector<double> w(k);
  for (int j = 0; j < k; ++j) z[j] = std::sqrt(spec.var_z[j]) * normal(rng);
  for (int j = 0; j < k; ++j) w[j] = std::sqrt(spec.var_w[j]) * normal(rng);
  for (Eigen::Index i = 0; i < basis.sin_part.rows(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < k; ++j) {
      acc += z[j] * basis.sin_part(i, j) + w[j] * basis.cos_part(i, j);
    }
    out[i] = acc;
  }
}

}  // namespace

std::vector<double> sample_path(const ExpansionSpec& spec, std::span<const double> grid,
                                std::uint64_t seed) {
  check_grid(grid);
  const GridBasis basis = grid_basis(spec, grid);
  std::vector<double> path(grid.size());
  draw_path(spec, basis, seed, path.data());
  return path;
}

Eigen::MatrixXd sample_paths(const ExpansionSpec& spec, std::span<const double> grid, int count,
                             std::uint64_t first_seed, Exec exec) {
  check_grid(grid);
  if (count < 1) throw DomainError("sample_paths: count must be >= 1");
  const GridBasis basis = grid_basis(spec, grid);
  // Row-major so each path is contiguous for draw_path.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> paths(
      count, static_cast<Eigen::Index>(grid.size()));
#pragma omp parallel for schedule(static) if (is_parallel(exec))
  for (int i = 0; i < count; ++i) {
    draw_path(spec, basis, first_seed + static_cast<std::uint64_t>(i), paths.row(i).data());
  }
  return paths;
}

double reconstruct_covariance(const ExpansionSpec& spec, double s, double t) {
  if (!(s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0)) {
    throw DomainError("reconstruct_covariance: times must lie in [0, 1]");
  }
  double acc = 0.0;
  for (int n = 0; n < spec.terms(); ++n) {
    const double x = spec.x[n];
    const double y = spec.y[n];
    acc += spec.var_z[n] * std::sin(x * s) * std::sin(x * t) / (x * x);
    acc += spec.var_w[n] * (1.0 - std::cos(y * s)) * (1.0 - std::cos(y * t)) / (y * y);
  }
  return acc;
}

}  // namespace fbmkl
