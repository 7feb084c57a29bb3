#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stokeslab/spectral/grid.hpp"

namespace stokeslab::singularity {

/// Range lo ≤ u ≤ hi on the positive side of the crest.
struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

struct LinearFit {
  std::vector<double> coefficients;
  double rms_residual = 0.0;
  std::vector<double> residuals;
};

using BasisFunction = std::function<double(double)>;

/// Least squares over a function basis (column-scaled, pivoted QR).
LinearFit least_squares(std::span<const double> x, std::span<const double> y,
                        std::span<const BasisFunction> basis);

/// Indices of grid nodes with lo ≤ u ≤ hi.
std::vector<int> window_indices(const spectral::Grid& grid, FitWindow window);

/// Checks lo ≥ min_lo, hi ≤ max_hi, lo < hi and at least `min_points`
/// nodes inside; throws InvalidArgument otherwise.
std::vector<int> checked_window(const spectral::Grid& grid, FitWindow window, double min_lo, double max_hi,
                                int min_points);

}  // namespace stokeslab::singularity
