#pragma once

#include <span>
#include <vector>

#include "stokeslab/spectral/multiplier.hpp"
#include "stokeslab/spectral/profile.hpp"

namespace stokeslab::babenko {

using spectral::DepthMode;
using spectral::Grid;
using spectral::PeriodicProfile;

/// Candidate travelling wave: elevation η(u), speed c, depth regime.
struct WaveState {
  PeriodicProfile profile;
  double speed;
  DepthMode mode;

  static WaveState from_cosine_coefficients(const Grid& grid, std::span<const double> a, double speed,
                                            const DepthMode& mode) {
    return WaveState{PeriodicProfile::from_cosine_coefficients(grid, a), speed, mode};
  }
};

struct Diagnostics {
  double residual_norm = 0.0;    ///< max |R(η)|
  double mean_zero_value = 0.0;  ///< (1/2π)∮ η(1 + Kη) du
  double crest_gap = 0.0;        ///< c²/2 − max η
  double tail_fraction = 0.0;    ///< spectral energy share of |k| > 0.9·N/2
};

struct SolverConfig {
  int n = 256;
  double newton_tol = 1e-12;
  int max_iters = 25;
  bool dealias = true;
  double tail_abort = 0.01;

  /// Throws ConfigError on non-positive tolerances or max_iters < 1.
  void validate() const;
};

/// Crest-to-trough height η(0) − η(π) of an even profile, from its cosine
/// coefficients: Σ a_k (1 − (−1)^k).
double wave_height(std::span<const double> cos_coeffs);
double wave_height(const PeriodicProfile& profile);

/// Value at the crest, Σ a_k.
double crest_value(const PeriodicProfile& profile);

/// max_j |η(u_j) − η(−u_j)|.
double evenness_defect(const PeriodicProfile& profile);

}  // namespace stokeslab::babenko
