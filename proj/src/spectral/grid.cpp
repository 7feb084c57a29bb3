#include "stokeslab/spectral/grid.hpp"

#include <numbers>
#include <string>

#include "stokeslab/error.hpp"

namespace stokeslab::spectral {

Grid::Grid(int n) : n_(n), spacing_(0.0) {
  if (n < 4 || n % 2 != 0)
    throw InvalidArgument("grid size must be even and >= 4, got " + std::to_string(n));
  spacing_ = 2.0 * std::numbers::pi / n;
  auto pts = std::make_shared<std::vector<double>>(static_cast<std::size_t>(n));
  // Symmetric construction so u_{N-1-j} = -u_j bit for bit.
  for (int j = 0; j < n / 2; ++j) {
    double u = (n / 2 - j - 0.5) * spacing_;
    (*pts)[static_cast<std::size_t>(j)] = -u;
    (*pts)[static_cast<std::size_t>(n - 1 - j)] = u;
  }
  points_ = std::move(pts);
}

Grid make_grid(int n) { return Grid(n); }

}  // namespace stokeslab::spectral
