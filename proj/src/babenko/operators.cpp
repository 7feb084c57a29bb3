#include "stokeslab/babenko/operators.hpp"

#include <algorithm>
#include <cmath>

#include "stokeslab/spectral/multiplier.hpp"
#include "stokeslab/spectral/products.hpp"

namespace stokeslab::babenko {

using spectral::apply_multiplier;
using spectral::k_multiplier;
using spectral::product;

PeriodicProfile residual(const WaveState& state, bool dealias) {
  const auto& eta = state.profile;
  const auto K = k_multiplier(state.mode, eta.size());
  const double c2 = state.speed * state.speed;
  PeriodicProfile Keta = apply_multiplier(eta, K);
  PeriodicProfile out = c2 * Keta - eta;
  out -= product(eta, Keta, dealias);
  out -= 0.5 * apply_multiplier(product(eta, eta, dealias), K);
  return out;
}

PeriodicProfile deviation(const WaveState& state) {
  return -state.profile + 0.5 * state.speed * state.speed;
}

PeriodicProfile fixed_point_map(const PeriodicProfile& dev, double c, bool dealias) {
  const auto K = k_multiplier(spectral::DepthMode::infinite(), dev.size());
  PeriodicProfile out = 0.5 * apply_multiplier(product(dev, dev, dealias), K);
  out += product(dev, apply_multiplier(dev, K), dealias);
  out += 0.5 * c * c;
  return out;
}

PeriodicProfile jacobian_apply(const WaveState& state, const PeriodicProfile& direction, bool dealias) {
  const auto& eta = state.profile;
  const auto K = k_multiplier(state.mode, eta.size());
  const double c2 = state.speed * state.speed;
  PeriodicProfile Kd = apply_multiplier(direction, K);
  PeriodicProfile out = c2 * Kd - direction;
  out -= product(direction, apply_multiplier(eta, K), dealias);
  out -= product(eta, Kd, dealias);
  out -= apply_multiplier(product(eta, direction, dealias), K);
  return out;
}

double tail_fraction(const PeriodicProfile& profile) {
  auto c = profile.coefficients();
  const double m = static_cast<double>(profile.size() / 2);
  double total = std::norm(c[0]), tail = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    const double e = 2.0 * std::norm(c[k]);
    total += e;
    if (static_cast<double>(k) > 0.9 * m) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

Diagnostics diagnose(const WaveState& state, bool dealias) {
  const auto& eta = state.profile;
  const auto K = k_multiplier(state.mode, eta.size());
  Diagnostics d;
  d.residual_norm = residual(state, dealias).max_abs();
  d.mean_zero_value = eta.mean() + product(eta, apply_multiplier(eta, K), dealias).mean();
  d.crest_gap = 0.5 * state.speed * state.speed - std::max(eta.max(), crest_value(eta));
  d.tail_fraction = tail_fraction(eta);
  return d;
}

}  // namespace stokeslab::babenko
