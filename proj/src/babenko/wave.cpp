#include "stokeslab/babenko/wave.hpp"

#include <algorithm>
#include <cmath>

#include "stokeslab/error.hpp"

namespace stokeslab::babenko {

void SolverConfig::validate() const {
  if (n < 4 || n % 2 != 0) throw ConfigError("grid size must be even and >= 4");
  if (!(newton_tol > 0.0)) throw ConfigError("newton_tol must be positive");
  if (max_iters < 1) throw ConfigError("max_iters must be >= 1");
  if (!(tail_abort > 0.0)) throw ConfigError("tail_abort must be positive");
}

double wave_height(std::span<const double> cos_coeffs) {
  double s = 0.0;
  for (std::size_t k = 1; k < cos_coeffs.size(); k += 2) s += 2.0 * cos_coeffs[k];
  return s;
}

double wave_height(const PeriodicProfile& profile) { return wave_height(profile.cosine_coefficients()); }

double crest_value(const PeriodicProfile& profile) {
  auto a = profile.cosine_coefficients();
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

double evenness_defect(const PeriodicProfile& profile) {
  const int n = profile.size();
  double d = 0.0;
  for (int j = 0; j < n / 2; ++j) d = std::max(d, std::abs(profile[j] - profile[n - 1 - j]));
  return d;
}

}  // namespace stokeslab::babenko
