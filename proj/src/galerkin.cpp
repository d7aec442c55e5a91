#include "fbmkl/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fbmkl/error.hpp"
#include "fbmkl/quadrature.hpp"
#include "line_fit.hpp"

namespace fbmkl {

// Assembly works on the lag u = x - y. Splitting R into its separable
// parts and |x - y|^2H, and integrating the sine products over the
// diagonal strips exactly (cos((n - 1/2) pi) = 0 collapses the strip
// integrals), every entry becomes a combination of three 1D moments on
// [0, 1]:
//   s_n = int u^a sin(b_n u),  c_n = int u^a cos(b_n u),
//   d_n = int u^{a+1} cos(b_n u),                       a = 2H,
// giving
//   A_nn = 2 s_n / b_n - (c_n - d_n)
//   A_nm = s_n / b_m + s_m / b_n - T_nm,   n != m,
//   T_nm = (s_m - s_n) / (b_n - b_m)   if n - m even,
//          (s_m + s_n) / (b_n + b_m)   if n - m odd.
// The u^a kink (the covariance diagonal) sits at the u = 0 panel boundary.

namespace {

struct LagMoments {
  std::vector<double> s;
  std::vector<double> c;
  std::vector<double> d;
};

LagMoments lag_moments(double alpha, int size, const QuadratureRule& rule, Exec exec) {
  const std::size_t q = rule.size();
  std::vector<double> wa(q);
  for (std::size_t i = 0; i < q; ++i) wa[i] = rule.weights[i] * std::pow(rule.nodes[i], alpha);

  LagMoments out{std::vector<double>(size), std::vector<double>(size),
                 std::vector<double>(size)};
#pragma omp parallel for schedule(static) if (is_parallel(exec))
  for (int n = 0; n < size; ++n) {
    const double b = sine_frequency(n + 1);
    double s = 0.0;
    double c = 0.0;
    double d = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
      const double u = rule.nodes[i];
      const double sn = std::sin(b * u);
      const double cs = std::cos(b * u);
      s += wa[i] * sn;
      c += wa[i] * cs;
      d += wa[i] * u * cs;
    }
    out.s[n] = s;
    out.c[n] = c;
    out.d[n] = d;
  }
  return out;
}

void check_quad(const QuadratureSpec& quad) {
  if (quad.panels < 1 || quad.points_per_panel < 2) {
    throw DomainError("quadrature descriptor needs >= 1 panel and >= 2 points per panel");
  }
}

}  // namespace

QuadratureSpec default_quadrature(int size) {
  return QuadratureSpec{std::max(16, size), 16};
}

GalerkinMatrix::GalerkinMatrix(HurstParams params, Eigen::MatrixXd entries,
                               QuadratureSpec quad, double refinement_change)
    : params_(params),
      entries_(std::move(entries)),
      quad_(quad),
      refinement_change_(refinement_change) {}

Eigen::MatrixXd assemble_on_rule(const HurstParams& params, int size,
                                 const QuadratureSpec& quad, Exec exec) {
  if (size < 1) throw DomainError("assemble: size must be >= 1");
  check_quad(quad);
  const QuadratureRule rule = graded_unit_rule(quad.panels, quad.points_per_panel);
  const LagMoments mom = lag_moments(params.alpha(), size, rule, exec);

  Eigen::MatrixXd a(size, size);
#pragma omp parallel for schedule(dynamic, 4) if (is_parallel(exec))
  for (int i = 0; i < size; ++i) {
    const double bi = sine_frequency(i + 1);
    a(i, i) = 2.0 * mom.s[i] / bi - (mom.c[i] - mom.d[i]);
    for (int j = i + 1; j < size; ++j) {
      const double bj = sine_frequency(j + 1);
      const double t = ((j - i) % 2 == 0) ? (mom.s[j] - mom.s[i]) / (bi - bj)
                                          : (mom.s[j] + mom.s[i]) / (bi + bj);
      a(i, j) = mom.s[i] / bj + mom.s[j] / bi - t;
    }
  }
  a.triangularView<Eigen::StrictlyLower>() = a.transpose().triangularView<Eigen::StrictlyLower>();
  return a;
}

GalerkinMatrix assemble(const HurstParams& params, int size, QuadratureSpec quad,
                        const AssemblyOptions& options) {
  check_quad(quad);
  Eigen::MatrixXd current = assemble_on_rule(params, size, quad, options.exec);
  double change = 0.0;
  for (int r = 0; r < options.max_refinements; ++r) {
    quad.panels *= 2;
    Eigen::MatrixXd finer = assemble_on_rule(params, size, quad, options.exec);
    change = (finer - current).cwiseAbs().maxCoeff();
    current = std::move(finer);
    if (change <= options.tolerance) {
      return GalerkinMatrix(params, std::move(current), quad, change);
    }
  }
  throw ConvergenceError("assemble: entries still moved by " + std::to_string(change) +
                         " after " + std::to_string(options.max_refinements) +
                         " panel doublings (H = " + std::to_string(params.h()) + ")");
}

SpectralResult symmetric_spectrum(const Eigen::MatrixXd& matrix, bool with_vectors,
                                  SpectrumSource source) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw DomainError("symmetric_spectrum: matrix must be square and non-empty");
  }
  if (!matrix.allFinite()) throw DomainError("symmetric_spectrum: matrix has non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      matrix, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("symmetric_spectrum: eigensolver did not converge");
  }
  SpectralResult out;
  out.source = source;
  out.eigenvalues = solver.eigenvalues().reverse();
  if (with_vectors) out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

SpectralResult eigen_spectrum(const GalerkinMatrix& matrix, bool with_vectors) {
  return symmetric_spectrum(matrix.entries(), with_vectors, SpectrumSource::galerkin);
}

double bronski_prediction(const HurstParams& params, int n) {
  if (n < 1) throw DomainError("bronski_prediction: n must be >= 1");
  const double p = params.decay_exponent();
  return std::sin(std::numbers::pi * params.h()) * std::tgamma(p) / std::pow(n, p);
}

AsymptoticFit fit_asymptotics(std::span<const double> eigenvalues, FitRange range,
                              double index_offset) {
  if (range.lo < 1 || range.hi > static_cast<int>(eigenvalues.size())) {
    throw EstimationError("fit_asymptotics: range [" + std::to_string(range.lo) + ", " +
                          std::to_string(range.hi) + "] outside spectrum of length " +
                          std::to_string(eigenvalues.size()));
  }
  if (range.hi - range.lo < 4) throw EstimationError("fit_asymptotics: range needs >= 5 points");
  if (!(range.lo - index_offset > 0.0)) {
    throw EstimationError("fit_asymptotics: index offset must stay below the range start");
  }

  const int count = range.hi - range.lo + 1;
  std::vector<double> xs(count);
  std::vector<double> ys(count);
  for (int i = 0; i < count; ++i) {
    const int n = range.lo + i;
    const double lambda = eigenvalues[n - 1];
    if (!(lambda > 0.0)) {
      throw EstimationError("fit_asymptotics: eigenvalue " + std::to_string(n) +
                            " is not positive (" + std::to_string(lambda) + ")");
    }
    xs[i] = std::log(n - index_offset);
    ys[i] = std::log(lambda);
  }
  const detail::LineFit line = detail::least_squares_line(xs, ys);

  AsymptoticFit fit;
  fit.exponent_p = -line.slope;
  fit.prefactor_c = std::exp(line.intercept);
  fit.r_squared = line.r_squared;
  fit.fit_range = range;
  fit.index_offset = index_offset;
  return fit;
}

AsymptoticFit fit_asymptotics(const SpectralResult& spectrum, FitRange range,
                              double index_offset) {
  return fit_asymptotics(
      std::span<const double>(spectrum.eigenvalues.data(), spectrum.eigenvalues.size()), range,
      index_offset);
}

}  // namespace fbmkl
