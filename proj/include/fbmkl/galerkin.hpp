#pragma once

#include <optional>
#include <span>

#include <Eigen/Dense>

#include "fbmkl/exec.hpp"
#include "fbmkl/kernel.hpp"

namespace fbmkl {

/// Composite Gauss-Legendre descriptor for the lag variable u = |x - y| in
/// [0, 1]. The covariance kink at x = y maps to u = 0, which is always a
/// panel boundary (and is graded toward).
struct QuadratureSpec {
  int panels = 256;
  int points_per_panel = 16;
};

/// A descriptor that resolves the oscillation of the first `size` sine
/// modes on the first attempt.
QuadratureSpec default_quadrature(int size);

struct AssemblyOptions {
  /// Max entry change allowed when the panel count doubles.
  double tolerance = 1e-9;
  int max_refinements = 6;
  Exec exec = Exec::parallel;
};

/// Covariance operator in the sine basis:
///   A(n, m) = 2 * int int R(x, y) sin((n - 1/2) pi x) sin((m - 1/2) pi y).
/// Indices are 0-based in `entries` (entry (0, 0) is A_{1,1}).
class GalerkinMatrix {
 public:
  GalerkinMatrix(HurstParams params, Eigen::MatrixXd entries,
                 QuadratureSpec quad, double refinement_change);

  const HurstParams& params() const { return params_; }
  int size() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  /// 1-based access, matching the basis index.
  double operator()(int n, int m) const { return entries_(n - 1, m - 1); }
  const QuadratureSpec& quad_spec() const { return quad_; }
  /// Max entry change observed at the last panel doubling.
  double refinement_change() const { return refinement_change_; }

 private:
  HurstParams params_;
  Eigen::MatrixXd entries_;
  QuadratureSpec quad_;
  double refinement_change_;
};

/// Builds the N x N matrix. Starting from `quad`, doubles the panel count
/// until no entry moves by more than `options.tolerance`; throws
/// ConvergenceError when `max_refinements` doublings do not get there.
GalerkinMatrix assemble(const HurstParams& params, int size,
                        QuadratureSpec quad, const AssemblyOptions& options = {});

/// Single-pass assembly on a fixed rule, no refinement. Kernel entry point
/// used by `assemble` and by the serial/parallel benchmarks.
Eigen::MatrixXd assemble_on_rule(const HurstParams& params, int size,
                                 const QuadratureSpec& quad, Exec exec);

enum class SpectrumSource { galerkin, projection, analytic, sample };

struct SpectralResult {
  Eigen::VectorXd eigenvalues;  // descending
  std::optional<Eigen::MatrixXd> eigenvectors;  // columns follow eigenvalues
  SpectrumSource source = SpectrumSource::galerkin;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  /// 1-based.
  double operator[](int n) const { return eigenvalues(n - 1); }
};

/// Full descending spectrum of a symmetric matrix (only the lower triangle
/// is read). Throws ConvergenceError if the solver fails.
SpectralResult symmetric_spectrum(const Eigen::MatrixXd& matrix, bool with_vectors,
                                  SpectrumSource source);

SpectralResult eigen_spectrum(const GalerkinMatrix& matrix, bool with_vectors = false);

/// sin(pi H) Gamma(2H + 1) / n^(2H + 1), the central value of Bronski's
/// eigenvalue bound written with index n rather than frequency n pi.
/// Reference only; the computed spectra are fitted, not compared to it.
double bronski_prediction(const HurstParams& params, int n);

/// Inclusive 1-based index range.
struct FitRange {
  int lo = 8;
  int hi = 64;
};

struct AsymptoticFit {
  double exponent_p = 0.0;
  double prefactor_c = 0.0;
  double r_squared = 0.0;
  FitRange fit_range;
  /// Regressor is log(n - index_offset).
  double index_offset = 0.0;
};

/// Least-squares line through (log(n - index_offset), log lambda_n) for n in
/// `range`: exponent_p = -slope, prefactor_c = exp(intercept). Requires
/// range.hi - range.lo >= 4 and lambda_n > 0 throughout; throws
/// EstimationError otherwise.
AsymptoticFit fit_asymptotics(std::span<const double> eigenvalues, FitRange range,
                              double index_offset = 0.0);
AsymptoticFit fit_asymptotics(const SpectralResult& spectrum, FitRange range,
                              double index_offset = 0.0);

}  // namespace fbmkl
