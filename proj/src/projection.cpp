#include "fbmkl/projection.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "fbmkl/error.hpp"

namespace fbmkl {

namespace {

constexpr double kDegenerateGap = 1e-6;

// sin(d) / d
double sinc(double d) {
  if (std::abs(d) < kDegenerateGap) {
    const double d2 = d * d;
    return 1.0 - d2 / 6.0 + d2 * d2 / 120.0;
  }
  return std::sin(d) / d;
}

// (1 - cos w) / w = int_0^1 sin(w t) dt, written without cancellation.
double versine_ratio(double w) {
  if (std::abs(w) < kDegenerateGap) return 0.5 * w - w * w * w / 24.0;
  const double s = std::sin(0.5 * w);
  return 2.0 * s * s / w;
}

void check_projection_args(int n, double z) {
  if (n < 1) throw DomainError("projection: sine index must be >= 1");
  if (!(z > 0.0)) throw DomainError("projection: Bessel zero must be positive");
}

}  // namespace

double mu_hat(int n, double x) {
  check_projection_args(n, x);
  const double b = sine_frequency(n);
  return std::numbers::sqrt2 / (2.0 * x) * (sinc(x - b) - sinc(x + b));
}

double mu_tilde(int n, double y) {
  check_projection_args(n, y);
  // int_0^1 sin(b t) dt = 1/b since cos(b) = 0, and
  // int_0^1 cos(y t) sin(b t) dt = [v(b + y) + v(b - y)] / 2, v(w) = (1 - cos w)/w.
  const double b = sine_frequency(n);
  return std::numbers::sqrt2 / y *
         (1.0 / b - 0.5 * (versine_ratio(b + y) + versine_ratio(b - y)));
}

double cos_branch_remainder_variance(const ExpansionSpec& spec) {
  // var_w[k] / y_k^2 -> pi c_H^2 y_k^{-1-2H} and y_{K+j} ~ y_K + j pi.
  // Euler-Maclaurin for sum_{j>=1} f(j), f(j) = (y_K + j pi)^{-s}.
  const double s = 1.0 + spec.params.alpha();
  const double pi = std::numbers::pi;
  const double a = spec.y.back() + pi;  // f(1) argument
  const double integral = std::pow(a, 1.0 - s) / (pi * (s - 1.0));
  const double f1 = std::pow(a, -s);
  const double df1 = -s * pi * std::pow(a, -s - 1.0);
  const double d3f1 = -s * (s + 1.0) * (s + 2.0) * pi * pi * pi * std::pow(a, -s - 3.0);
  const double sum = integral + 0.5 * f1 - df1 / 12.0 + d3f1 / 720.0;
  return pi * spec.params.c_h_sq() * sum;
}

ProjectionTable build_projection(const ExpansionSpec& spec, int sine_count, Remainder remainder,
                                 Exec exec) {
  if (sine_count < 1) throw DomainError("build_projection: sine_count must be >= 1");
  const int k_terms = spec.terms();
  ProjectionTable table;
  table.mu_hat.resize(sine_count, k_terms);
  table.mu_tilde.resize(sine_count, k_terms);
  table.var_z = Eigen::Map<const Eigen::VectorXd>(spec.var_z.data(), k_terms);
  table.var_w = Eigen::Map<const Eigen::VectorXd>(spec.var_w.data(), k_terms);

#pragma omp parallel for schedule(static) if (is_parallel(exec))
  for (int k = 0; k < k_terms; ++k) {
    for (int n = 0; n < sine_count; ++n) {
      table.mu_hat(n, k) = mu_hat(n + 1, spec.x[k]);
      table.mu_tilde(n, k) = mu_tilde(n + 1, spec.y[k]);
    }
  }

  if (remainder == Remainder::lumped) {
    table.remainder_coeff.resize(sine_count);
    for (int n = 0; n < sine_count; ++n) {
      table.remainder_coeff(n) = std::numbers::sqrt2 / sine_frequency(n + 1);
    }
    table.remainder_variance = cos_branch_remainder_variance(spec);
  }
  return table;
}

namespace {

struct MomentSums {
  double sin_branch = 0.0;
  double cos_branch = 0.0;
  double tail = 0.0;
};

// Accumulates term k (sin then cos) in index order; the same order as the
// interleaved mapping used by the transfer identity.
MomentSums moment_sums(int i, int j, const ProjectionTable& table) {
  // Fixed factor order keeps E[c_n c_m] bitwise symmetric.
  if (i > j) std::swap(i, j);
  const int k_terms = table.terms();
  const int tail_start = k_terms - k_terms / 10;
  MomentSums sums;
  for (int k = 0; k < k_terms; ++k) {
    const double zs = table.var_z(k) * table.mu_hat(i, k) * table.mu_hat(j, k);
    const double ws = table.var_w(k) * table.mu_tilde(i, k) * table.mu_tilde(j, k);
    sums.sin_branch += zs;
    sums.cos_branch += ws;
    if (k >= tail_start) sums.tail += zs + ws;
  }
  if (table.has_remainder()) {
    const double rem =
        table.remainder_variance * table.remainder_coeff(i) * table.remainder_coeff(j);
    sums.cos_branch += rem;
    sums.tail += rem;
  }
  return sums;
}

void check_index(int n, const ProjectionTable& table) {
  if (n < 1 || n > table.sine_count()) {
    throw DomainError("projected_moment: index outside the table's sine range");
  }
}

}  // namespace

ProjectedMoment projected_moment(int n, int m, const ProjectionTable& table) {
  check_index(n, table);
  check_index(m, table);
  const MomentSums sums = moment_sums(n - 1, m - 1, table);
  ProjectedMoment out;
  out.sin_branch = sums.sin_branch;
  out.cos_branch = sums.cos_branch;
  out.value = sums.sin_branch + sums.cos_branch;
  // Off the diagonal the moment can vanish; measure the tail against the
  // Cauchy-Schwarz scale sqrt(lambda_n lambda_m) instead.
  double scale = std::abs(out.value);
  if (n != m) {
    const MomentSums dn = moment_sums(n - 1, n - 1, table);
    const MomentSums dm = moment_sums(m - 1, m - 1, table);
    scale = std::sqrt((dn.sin_branch + dn.cos_branch) * (dm.sin_branch + dm.cos_branch));
  }
  out.tail_fraction = scale > 0.0 ? std::abs(sums.tail) / scale : 0.0;
  out.truncation_warning = out.tail_fraction > 0.01;
  return out;
}

Eigen::MatrixXd projected_moments(const ProjectionTable& table, Exec exec) {
  const int n_count = table.sine_count();
  Eigen::MatrixXd out(n_count, n_count);
#pragma omp parallel for schedule(dynamic, 4) if (is_parallel(exec))
  for (int i = 0; i < n_count; ++i) {
    for (int j = i; j < n_count; ++j) {
      const MomentSums sums = moment_sums(i, j, table);
      out(i, j) = sums.sin_branch + sums.cos_branch;
      out(j, i) = out(i, j);
    }
  }
  return out;
}

std::vector<double> projected_diagonal(const ProjectionTable& table) {
  std::vector<double> out(table.sine_count());
  for (int i = 0; i < table.sine_count(); ++i) {
    const MomentSums sums = moment_sums(i, i, table);
    out[i] = sums.sin_branch + sums.cos_branch;
  }
  return out;
}

AsymptoticFit projected_spectrum_fit(const ProjectionTable& table, FitRange range,
                                     double index_offset) {
  const std::vector<double> diag = projected_diagonal(table);
  return fit_asymptotics(diag, range, index_offset);
}

}  // namespace fbmkl
