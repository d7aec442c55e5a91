#include "fbmkl/estimator.hpp"

#include <cmath>
#include <random>
#include <string>

#include "fbmkl/error.hpp"

namespace fbmkl {

DisturbanceKind parse_disturbance_kind(std::string_view text) {
  if (text == "none") return DisturbanceKind::none;
  if (text == "noise" || text == "white_noise") return DisturbanceKind::white_noise;
  if (text == "trend" || text == "linear_trend") return DisturbanceKind::linear_trend;
  throw DomainError("unknown disturbance kind '" + std::string(text) +
                    "' (expected none, noise or trend)");
}

std::string to_string(DisturbanceKind kind) {
  switch (kind) {
    case DisturbanceKind::none: return "none";
    case DisturbanceKind::white_noise: return "noise";
    case DisturbanceKind::linear_trend: return "trend";
  }
  throw DomainError("unknown disturbance kind");
}

std::vector<double> uniform_grid(int points) {
  if (points < 1) throw DomainError("uniform_grid: points must be >= 1");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = (i + 0.5) / points;
  return grid;
}

PathEnsemble sample_ensemble(const ExpansionSpec& spec, int count, int points,
                             std::uint64_t first_seed, Exec exec) {
  if (count < 2 || points < 8) {
    throw DomainError("sample_ensemble: need >= 2 paths and >= 8 grid points");
  }
  PathEnsemble ensemble;
  ensemble.grid = uniform_grid(points);
  ensemble.paths = sample_paths(spec, ensemble.grid, count, first_seed, exec);
  ensemble.h_true = spec.params;
  return ensemble;
}

PathEnsemble add_disturbance(const PathEnsemble& ensemble, DisturbanceKind kind,
                             double magnitude, std::uint64_t seed) {
  if (!(magnitude >= 0.0)) throw DomainError("add_disturbance: magnitude must be >= 0");
  PathEnsemble out = ensemble;
  out.disturbance = Disturbance{kind, magnitude};
  switch (kind) {
    case DisturbanceKind::none:
      return out;
    case DisturbanceKind::white_noise: {
      if (magnitude == 0.0) return out;
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> normal(0.0, magnitude);
      for (int i = 0; i < out.path_count(); ++i) {
        for (int j = 0; j < out.point_count(); ++j) out.paths(i, j) += normal(rng);
      }
      return out;
    }
    case DisturbanceKind::linear_trend:
      for (int j = 0; j < out.point_count(); ++j) {
        out.paths.col(j).array() += magnitude * out.grid[j];
      }
      return out;
  }
  throw DomainError("add_disturbance: unknown disturbance kind");
}

HurstEstimate hurst_from_spectrum(const AsymptoticFit& fit) {
  if (!(fit.exponent_p > 1.0)) {
    throw EstimationError("hurst_from_spectrum: decay exponent " +
                          std::to_string(fit.exponent_p) +
                          " <= 1 violates the Weyl bound; the spectrum is unreliable");
  }
  HurstEstimate est;
  est.fit = fit;
  est.value = 0.5 * (fit.exponent_p - 1.0);
  constexpr double kEdge = 1e-12;
  if (est.value >= 1.0) {
    est.value = 1.0 - kEdge;
    est.out_of_range = true;
  }
  return est;
}

SpectralResult ensemble_spectrum(const PathEnsemble& ensemble) {
  const int m = ensemble.path_count();
  const int p = ensemble.point_count();
  if (m < 2 || p < 8) throw EstimationError("ensemble needs >= 2 paths and >= 8 points");
  if (!ensemble.paths.allFinite()) throw EstimationError("ensemble has non-finite samples");
  // Across-path estimator; fBm is not stationary, so no time averaging.
  const Eigen::MatrixXd centered = ensemble.paths.rowwise() - ensemble.paths.colwise().mean();
  Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(m - 1);
  cov /= static_cast<double>(p);
  return symmetric_spectrum(cov, false, SpectrumSource::sample);
}

HurstEstimate pca_hurst(const PathEnsemble& ensemble, FitRange range) {
  if (ensemble.path_count() < 4 * range.hi) {
    throw EstimationError("pca_hurst: " + std::to_string(ensemble.path_count()) +
                          " paths is too few for fit range up to " + std::to_string(range.hi) +
                          " (need >= " + std::to_string(4 * range.hi) + ")");
  }
  const SpectralResult spectrum = ensemble_spectrum(ensemble);
  return hurst_from_spectrum(fit_asymptotics(spectrum, range, kSineIndexOffset));
}

}  // namespace fbmkl
