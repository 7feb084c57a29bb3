#include "stokeslab/babenko/surface.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stokeslab/error.hpp"
#include "stokeslab/spectral/multiplier.hpp"

namespace stokeslab::babenko {

PhysicalSurface physical_surface(const WaveState& state, int nodes) {
  if (!state.mode.is_deep()) throw InvalidArgument("physical_surface supports deep water only");
  const auto& eta = state.profile;
  const auto h_eta = spectral::apply_multiplier(eta, spectral::hilbert_multiplier(eta.size()));
  PhysicalSurface s;
  s.x.resize(static_cast<std::size_t>(eta.size()));
  s.y.assign(eta.values().begin(), eta.values().end());
  for (int j = 0; j < eta.size(); ++j) s.x[static_cast<std::size_t>(j)] = eta.grid().point(j) - h_eta[j];
  s.crest_angle_deg = crest_angle(s.x, s.y, nodes);
  return s;
}

double crest_angle(std::span<const double> x, std::span<const double> y, int nodes) {
  const int n = static_cast<int>(x.size());
  if (y.size() != x.size() || n % 2 != 0) throw InvalidArgument("crest_angle needs matching even-length samples");
  if (nodes < 1 || n / 2 + nodes >= n)
    throw InvalidArgument("crest window of " + std::to_string(nodes) + " nodes does not fit in " + std::to_string(n));
  auto at = [](std::span<const double> v, int i) { return v[static_cast<std::size_t>(i)]; };
  const int r0 = n / 2, r1 = r0 + nodes;
  const int l0 = n / 2 - 1, l1 = l0 - nodes;
  const double right = (at(y, r0) - at(y, r1)) / (at(x, r1) - at(x, r0));
  const double left = (at(y, l0) - at(y, l1)) / (at(x, l0) - at(x, l1));
  const double slope = 0.5 * (left + right);
  return 180.0 - 2.0 * std::atan(slope) * 180.0 / std::numbers::pi;
}

}  // namespace stokeslab::babenko
