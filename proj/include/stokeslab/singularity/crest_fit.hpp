#pragma once

#include <optional>
#include <vector>

#include "stokeslab/singularity/fitting.hpp"
#include "stokeslab/spectral/profile.hpp"

namespace stokeslab::singularity {

/// Seed of the subleading exponent.
inline constexpr double kSubleadingSeed = 1.469;

struct SingularityFit {
  double A = 0.0;
  double beta = 0.0;
  std::optional<double> B;
  std::optional<double> mu;
  FitWindow window;
  double rms_residual = 0.0;  ///< rms of ln(deviation / model) over the window
  int points = 0;
  bool subleading_requested = false;
  bool subleading_failed = false;
};

/// (10Δu, 0.1).
FitWindow default_crest_window(const spectral::Grid& grid);

/// Fits level − η ≈ A|u|^β on the window (log-log least squares). With
/// subleading, refits A|u|^β + B|u|^μ jointly, μ confined to (2/3, 2); on
/// success A and β are replaced by the joint values, otherwise B and μ stay
/// empty and subleading_failed is set.
SingularityFit crest_fit_about(const spectral::PeriodicProfile& profile, double level,
                               std::optional<FitWindow> window = {}, bool subleading = false);

/// crest_fit_about with level c²/2.
SingularityFit crest_fit(const spectral::PeriodicProfile& profile, double c, std::optional<FitWindow> window = {},
                         bool subleading = false);

struct FitSample {
  double u;
  double deviation;
  double model;
  double residual;  ///< ln(deviation / model)
};

/// Per-node data behind a fit; the rms of `residual` equals rms_residual.
std::vector<FitSample> fit_samples(const spectral::PeriodicProfile& profile, double level, const SingularityFit& fit);

}  // namespace stokeslab::singularity
