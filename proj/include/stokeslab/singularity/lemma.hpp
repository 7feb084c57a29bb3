#pragma once

#include <vector>

namespace stokeslab::singularity {

/// Inner exclusion of the remainder sup, in grid spacings.
inline constexpr int kLemmaExclusion = 32;

enum class PowerInput {
  exact,   ///< exact Fourier coefficients of the periodized power, Hann-filtered
  sampled  ///< FFT of point samples
};

struct LemmaReport {
  double nu = 0.0;
  bool is_signed = false;
  double u0 = 0.0;
  double coefficient = 0.0;  ///< predicted singular coefficient
  std::vector<int> resolutions;
  std::vector<double> remainder_sup;
  std::vector<double> difference_sup;  ///< sup of the first divided difference
  std::vector<double> inner_edge;      ///< kLemmaExclusion·Δu per resolution
  double convergence_ratio = 0.0;      ///< last sup / previous sup
};

/// −cot(πν/2) for unsigned input, tan(πν/2) for signed.
double lemma_coefficient(double nu, bool is_signed);

/// H applied to |u|^{ν−1} (times sgn u when signed) minus the predicted
/// singular part: c·|u|^{ν−1}·sgn(u) unsigned, c·|u|^{ν−1} signed. The sup
/// runs over kLemmaExclusion·Δu ≤ |u| < u0. Resolutions are evaluated in
/// parallel, capped by STOKESLAB_THREADS.
LemmaReport lemma_remainder_report(double nu, bool is_signed, double u0, const std::vector<int>& resolutions,
                                   PowerInput input = PowerInput::exact);

/// Worker count from STOKESLAB_THREADS (default: hardware concurrency).
unsigned worker_limit();

}  // namespace stokeslab::singularity
