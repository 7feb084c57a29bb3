#pragma once

#include <span>
#include <vector>

#include "stokeslab/babenko/wave.hpp"

namespace stokeslab::babenko {

inline constexpr int kCrestAngleNodes = 16;

struct PhysicalSurface {
  std::vector<double> x;
  std::vector<double> y;
  double crest_angle_deg = 180.0;
};

/// Deep-water conformal map x = u − H[η], y = η, with the interior crest
/// angle estimated over `nodes` grid points on each side of the crest.
PhysicalSurface physical_surface(const WaveState& state, int nodes = kCrestAngleNodes);

/// 180° − 2·atan(slope), slope being the mean of the two one-sided secant
/// slopes between the node next to the crest and the node `nodes` further
/// out. Expects x, y ordered by u on a staggered grid (crest between the
/// two central samples).
double crest_angle(std::span<const double> x, std::span<const double> y, int nodes = kCrestAngleNodes);

}  // namespace stokeslab::babenko
