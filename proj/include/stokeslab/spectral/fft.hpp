#pragma once

#include <complex>
#include <span>
#include <vector>

namespace stokeslab::spectral {

/// One-sided Fourier coefficients c_0 … c_{N/2} of a real 2π-periodic
/// function, f(u) = c_0 + 2·Re Σ_{k≥1} c_k e^{iku}.
using Spectrum = std::vector<std::complex<double>>;

/// Fourier coefficients of samples taken on the staggered N-point grid.
///
/// The coefficients are phase-corrected to the true origin u = 0, so they
/// can be re-evaluated on any other staggered grid. On a staggered grid the
/// Nyquist pair is a pure sine, hence c_{N/2} is purely imaginary.
Spectrum forward_coefficients(std::span<const double> samples);

/// Evaluates a coefficient sequence on the staggered N-point grid.
///
/// Coefficients with k > N/2 are dropped. The k = N/2 term is sampled as
/// given, which folds its cosine part onto zero.
std::vector<double> evaluate_on_grid(std::span<const std::complex<double>> coeffs, int n);

}  // namespace stokeslab::spectral
