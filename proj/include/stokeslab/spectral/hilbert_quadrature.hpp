#pragma once

#include "stokeslab/spectral/profile.hpp"

namespace stokeslab::spectral {

/// Hilbert transform at a single point from the principal-value integral
/// (1/π) Σ_n p.v.∫ f(u′)/(u′ − u + 2πn) du′, summed over |n| ≤ terms.
///
/// f(u) is subtracted over every image so the integrand is regular; the
/// subtracted integrals telescope to a closed form. The midpoint rule runs
/// over the concatenated images and the remaining images contribute through
/// the analytic leading term of the tail. f(u) and, at a node, f′(u) come
/// from barycentric trigonometric interpolation, not from an FFT.
///
/// Independent of apply_multiplier; intended as an oracle for it.
double hilbert_pv_quadrature(const PeriodicProfile& f, double u, int terms);

}  // namespace stokeslab::spectral
