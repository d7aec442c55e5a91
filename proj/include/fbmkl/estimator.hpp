#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fbmkl/exec.hpp"
#include "fbmkl/expansion.hpp"
#include "fbmkl/galerkin.hpp"
#include "fbmkl/kernel.hpp"

namespace fbmkl {

enum class DisturbanceKind { none, white_noise, linear_trend };

/// Accepts "none", "noise" / "white_noise", "trend" / "linear_trend".
/// Throws DomainError otherwise.
DisturbanceKind parse_disturbance_kind(std::string_view text);
std::string to_string(DisturbanceKind kind);

struct Disturbance {
  DisturbanceKind kind = DisturbanceKind::none;
  double magnitude = 0.0;
};

/// M sample paths on P uniform points of [0, 1], one path per row.
struct PathEnsemble {
  Eigen::MatrixXd paths;
  std::vector<double> grid;
  std::optional<HurstParams> h_true;
  Disturbance disturbance;

  int path_count() const { return static_cast<int>(paths.rows()); }
  int point_count() const { return static_cast<int>(paths.cols()); }
};

/// Cell midpoints (i + 1/2) / points, i = 0 .. points - 1.
std::vector<double> uniform_grid(int points);

/// Paths for seeds first_seed .. first_seed + count - 1 on uniform_grid(points).
PathEnsemble sample_ensemble(const ExpansionSpec& spec, int count, int points,
                             std::uint64_t first_seed, Exec exec = Exec::parallel);

/// Returns a disturbed copy. White noise adds i.i.d. N(0, magnitude^2) to
/// every sample; a linear trend adds magnitude * t to every path.
PathEnsemble add_disturbance(const PathEnsemble& ensemble, DisturbanceKind kind,
                             double magnitude, std::uint64_t seed);

struct HurstEstimate {
  double value = 0.0;
  bool out_of_range = false;  // (p - 1) / 2 fell outside (0, 1) and was clamped
  AsymptoticFit fit;
};

/// Inverts p = 2H + 1. Throws EstimationError if p <= 1.
HurstEstimate hurst_from_spectrum(const AsymptoticFit& fit);

/// Regressor offset used by pca_hurst: eigenvalue n of the fBm covariance
/// decays with the frequency of the n-th sine mode, (n - 1/2) pi.
inline constexpr double kSineIndexOffset = 0.5;

/// Ensemble PCA estimate: across-path sample covariance, eigenvalues scaled
/// by 1/P, decay fitted on log(n - 1/2) over `range`. Needs M >= 4 range.hi.
HurstEstimate pca_hurst(const PathEnsemble& ensemble, FitRange range = {4, 20});

/// Eigenvalues of the ensemble covariance scaled by 1/P, descending.
SpectralResult ensemble_spectrum(const PathEnsemble& ensemble);

}  // namespace fbmkl
