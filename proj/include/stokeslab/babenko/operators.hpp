#pragma once

#include "stokeslab/babenko/wave.hpp"

namespace stokeslab::babenko {

/// (c²K − 1)η − ηKη − ½K(η²).
PeriodicProfile residual(const WaveState& state, bool dealias = true);

/// η̃ = c²/2 − η.
PeriodicProfile deviation(const WaveState& state);

/// Deep-water map T(η̃) = c²/2 + ½K(η̃²) + η̃Kη̃. Its fixed points are the
/// deviations of solutions, and dev − T(dev) = R(c²/2 − dev).
PeriodicProfile fixed_point_map(const PeriodicProfile& dev, double c, bool dealias = true);

/// (c²K − 1)δ − δKη − ηKδ − K(ηδ).
PeriodicProfile jacobian_apply(const WaveState& state, const PeriodicProfile& direction, bool dealias = true);

/// Share of the spectral energy in |k| > 0.9·N/2; 0 for a zero profile.
double tail_fraction(const PeriodicProfile& profile);

Diagnostics diagnose(const WaveState& state, bool dealias = true);

}  // namespace stokeslab::babenko
