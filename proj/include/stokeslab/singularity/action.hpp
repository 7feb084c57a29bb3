#pragma once

#include "stokeslab/singularity/fitting.hpp"

namespace stokeslab::singularity {

/// Default window for the action fits. Inner edge keeps clear of the grid
/// scale, outer edge of the O(u⁴) remainder.
inline constexpr FitWindow kActionWindow{0.02, 0.2};

/// −p·tan(πp/2), the coefficient of |u|^{p−1} in K_∞|u|^p.
/// Throws LogCase at p = 1 and InvalidArgument outside (0, 2).
double predicted_action_coefficient(double p);

/// Applies the K_∞ symbol to samples of |u|^p and fits
/// c₁|u|^{p−1} + c₀ + c₂u² + c₄u⁴ over the window; returns c₁.
/// The window must lie in [10Δu, 0.5] and hold at least 8 nodes.
double measured_action_coefficient(double p, int n, FitWindow window = kActionWindow);

struct LogCaseReport {
  int n = 0;
  FitWindow window;
  double log_coefficient = 0.0;  ///< a in a·ln|u| + b for K_∞|u|
  double expected = 0.0;         ///< 2/π
  double relative_error = 0.0;
  double smooth_log_coefficient = 0.0;  ///< a in a·ln|u| + b + c·u² for K_∞u²
};

/// Window defaults to (10Δu, 0.1).
LogCaseReport log_case_check(int n);
LogCaseReport log_case_check(int n, FitWindow window);

struct CancellationReport {
  double A = 0.0;
  int n = 0;
  FitWindow window;
  double expected = 0.0;          ///< 2A²/√3
  double product_term = 0.0;      ///< |u|^{1/3} coefficient of f·K_∞f
  double half_k_square = 0.0;     ///< |u|^{1/3} coefficient of ½K_∞(f²)
  double sum = 0.0;               ///< of their sum
  double fixed_point_term = 0.0;  ///< of fixed_point_map(f, c) − c²/2 (dealiased)
};

/// f = A|u|^{2/3}. Requires A > 0 and N ≥ 4096.
CancellationReport cancellation_check(double A, int n, FitWindow window = kActionWindow);

}  // namespace stokeslab::singularity
