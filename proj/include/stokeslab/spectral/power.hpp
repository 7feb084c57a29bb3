#pragma once

#include "stokeslab/spectral/fft.hpp"
#include "stokeslab/spectral/profile.hpp"

namespace stokeslab::spectral {

/// Samples of |u|^p (or |u|^p·sgn(u) when is_signed) on (−π, π), treated as
/// 2π-periodic. Requires p > −1.
PeriodicProfile sample_power(double p, const Grid& grid, bool is_signed);

/// Exact Fourier coefficients c_0 … c_{N/2} of the periodized |u|^p
/// (or |u|^p·sgn(u)), free of the aliasing that point samples carry.
///
/// Uses ∫₀^π u^p e^{iku} du = Γ(p+1) e^{iπ(p+1)/2} k^{−(p+1)} − ∫_π^∞ …, the
/// tail integrated along the rotated contour with Gauss–Laguerre.
Spectrum power_coefficients(double p, int n, bool is_signed);

}  // namespace stokeslab::spectral
