#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fbmkl/galerkin.hpp"
#include "fbmkl/projection.hpp"

namespace fbmkl {

/// Where the Bessel-series coefficient variances live.
enum class Normalization {
  /// Raw projection coefficients in A, variances in tau.
  coefficient_variance,
  /// A scaled by the coefficient standard deviations, tau == 1.
  unit_variance,
};

/// Matrix A(k, n) of the bounded operator taking the orthonormal sine basis
/// to the Riesz basis of series elements: column n holds the coefficients of
/// basis index n across all series elements k. Series elements are
/// interleaved: sin-branch term j at k = 2j - 1, cos-branch term j at
/// k = 2j, and the lumped remainder (if any) last. Indices are 1-based in
/// the accessors.
class MappingMatrix {
 public:
  /// `series_count` rows are series elements; any rows after them are
  /// lumped remainders. Defaults to all rows.
  MappingMatrix(Eigen::MatrixXd entries, Normalization normalization, int series_count = -1);

  int riesz_count() const { return static_cast<int>(entries_.rows()); }
  int series_count() const { return series_count_; }
  int basis_count() const { return static_cast<int>(entries_.cols()); }
  double operator()(int k, int n) const { return entries_(k - 1, n - 1); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  Normalization normalization() const { return normalization_; }

  /// max_n sum_k A(k, n)^2, the Bessel-sequence bound of the columns.
  double bessel_bound() const;

 private:
  Eigen::MatrixXd entries_;
  Normalization normalization_;
  int series_count_;
};

MappingMatrix build_mapping(const ProjectionTable& table,
                            Normalization normalization = Normalization::coefficient_variance);

/// Second moments tau_k of the series elements in the interleaved order of
/// `build_mapping`, consistent with `normalization`.
std::vector<double> source_moments(const ProjectionTable& table,
                                   Normalization normalization = Normalization::coefficient_variance);

/// lambda_n = sum_k A(k, n)^2 tau_k for every basis index n. Throws
/// std::invalid_argument on a length mismatch or a negative tau.
std::vector<double> transfer_eigenvalues(const MappingMatrix& mapping,
                                         std::span<const double> tau);

/// Series index k (1-based) maximizing |A(k, n)| over the series elements
/// (the lumped remainder is not a basis element and is skipped); ties go to
/// the smallest k.
int argmax_column_row(const MappingMatrix& mapping, int n);

struct ArgmaxFit {
  double slope = 0.0;  // d_7 in k* ~ d_7 n
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<int> rows;  // k* for n = range.lo .. range.hi
};

/// Least-squares line through (n, k*(n)) over `range`.
ArgmaxFit fit_argmax_rows(const MappingMatrix& mapping, FitRange range);

/// Share of lambda_n coming from series index k > `cutoff` (1-based, in the
/// interleaved order).
double transfer_tail_fraction(const MappingMatrix& mapping, std::span<const double> tau,
                              int n, int cutoff);

}  // namespace fbmkl
