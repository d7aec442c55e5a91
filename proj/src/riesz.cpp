#include "fbmkl/riesz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fbmkl/error.hpp"
#include "line_fit.hpp"

namespace fbmkl {

MappingMatrix::MappingMatrix(Eigen::MatrixXd entries, Normalization normalization,
                             int series_count)
    : entries_(std::move(entries)),
      normalization_(normalization),
      series_count_(series_count < 0 ? static_cast<int>(entries_.rows()) : series_count) {
  if (!entries_.allFinite()) throw DomainError("MappingMatrix: entries must be finite");
  if (series_count_ < 1 || series_count_ > entries_.rows()) {
    throw DomainError("MappingMatrix: series_count outside the row range");
  }
}

double MappingMatrix::bessel_bound() const { return entries_.colwise().squaredNorm().maxCoeff(); }

MappingMatrix build_mapping(const ProjectionTable& table, Normalization normalization) {
  const int n_count = table.sine_count();
  const int k_terms = table.terms();
  const int rows = 2 * k_terms + (table.has_remainder() ? 1 : 0);
  const bool unit = normalization == Normalization::unit_variance;

  Eigen::MatrixXd a(rows, n_count);
  for (int n = 0; n < n_count; ++n) {
    for (int k = 0; k < k_terms; ++k) {
      a(2 * k, n) = table.mu_hat(n, k) * (unit ? std::sqrt(table.var_z(k)) : 1.0);
      a(2 * k + 1, n) = table.mu_tilde(n, k) * (unit ? std::sqrt(table.var_w(k)) : 1.0);
    }
    if (table.has_remainder()) {
      a(rows - 1, n) =
          table.remainder_coeff(n) * (unit ? std::sqrt(table.remainder_variance) : 1.0);
    }
  }
  return MappingMatrix(std::move(a), normalization, 2 * k_terms);
}

std::vector<double> source_moments(const ProjectionTable& table, Normalization normalization) {
  const int k_terms = table.terms();
  const std::size_t rows = 2 * k_terms + (table.has_remainder() ? 1 : 0);
  if (normalization == Normalization::unit_variance) return std::vector<double>(rows, 1.0);
  std::vector<double> tau(rows);
  for (int k = 0; k < k_terms; ++k) {
    tau[2 * k] = table.var_z(k);
    tau[2 * k + 1] = table.var_w(k);
  }
  if (table.has_remainder()) tau.back() = table.remainder_variance;
  return tau;
}

namespace {

void check_tau(const MappingMatrix& mapping, std::span<const double> tau) {
  if (static_cast<int>(tau.size()) != mapping.riesz_count()) {
    throw std::invalid_argument("transfer_eigenvalues: tau has " + std::to_string(tau.size()) +
                                " entries, mapping has " +
                                std::to_string(mapping.riesz_count()) + " series elements");
  }
  for (double t : tau) {
    if (!(t >= 0.0)) throw std::invalid_argument("transfer_eigenvalues: tau must be >= 0");
  }
}

void check_column(const MappingMatrix& mapping, int n) {
  if (n < 1 || n > mapping.basis_count()) {
    throw DomainError("mapping column index " + std::to_string(n) + " out of range");
  }
}

}  // namespace

std::vector<double> transfer_eigenvalues(const MappingMatrix& mapping,
                                         std::span<const double> tau) {
  check_tau(mapping, tau);
  const Eigen::MatrixXd& a = mapping.entries();
  std::vector<double> lambda(mapping.basis_count());
  for (int n = 0; n < mapping.basis_count(); ++n) {
    double acc = 0.0;
    for (int k = 0; k < mapping.riesz_count(); ++k) acc += a(k, n) * a(k, n) * tau[k];
    lambda[n] = acc;
  }
  return lambda;
}

double transfer_tail_fraction(const MappingMatrix& mapping, std::span<const double> tau, int n,
                              int cutoff) {
  check_tau(mapping, tau);
  check_column(mapping, n);
  const Eigen::MatrixXd& a = mapping.entries();
  double total = 0.0;
  double tail = 0.0;
  for (int k = 0; k < mapping.riesz_count(); ++k) {
    const double term = a(k, n - 1) * a(k, n - 1) * tau[k];
    total += term;
    if (k >= cutoff) tail += term;
  }
  return total > 0.0 ? tail / total : 0.0;
}

int argmax_column_row(const MappingMatrix& mapping, int n) {
  check_column(mapping, n);
  const Eigen::MatrixXd& a = mapping.entries();
  int best = 0;
  double best_value = std::abs(a(0, n - 1));
  for (int k = 1; k < mapping.series_count(); ++k) {
    const double v = std::abs(a(k, n - 1));
    if (v > best_value) {
      best = k;
      best_value = v;
    }
  }
  return best + 1;
}

ArgmaxFit fit_argmax_rows(const MappingMatrix& mapping, FitRange range) {
  if (range.lo < 1 || range.hi > mapping.basis_count() || range.hi - range.lo < 1) {
    throw DomainError("fit_argmax_rows: invalid column range");
  }
  ArgmaxFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int n = range.lo; n <= range.hi; ++n) {
    const int k = argmax_column_row(mapping, n);
    fit.rows.push_back(k);
    xs.push_back(n);
    ys.push_back(k);
  }
  const detail::LineFit line = detail::least_squares_line(xs, ys);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  return fit;
}

}  // namespace fbmkl
