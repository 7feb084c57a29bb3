#pragma once

#include <memory>
#include <span>
#include <vector>

namespace stokeslab::spectral {

/// Uniform staggered grid on the 2π-periodic domain.
///
/// Points are u_j = −π + (j + ½)·Δu with Δu = 2π/N, so neither the crest
/// u = 0 nor the trough u = ±π is ever sampled. N must be even and at
/// least 4. Copies share the point table.
class Grid {
 public:
  explicit Grid(int n);

  int size() const noexcept { return n_; }
  double spacing() const noexcept { return spacing_; }
  /// u_0 = −π + Δu/2; the phase reference of every Fourier coefficient.
  double first_point() const noexcept { return (*points_)[0]; }
  double point(int j) const noexcept { return (*points_)[static_cast<std::size_t>(j)]; }
  std::span<const double> points() const noexcept { return *points_; }

  /// Index of the first node with u > 0 (equal to N/2).
  int first_positive() const noexcept { return n_ / 2; }

  friend bool operator==(const Grid& a, const Grid& b) noexcept { return a.n_ == b.n_; }

 private:
  int n_;
  double spacing_;
  std::shared_ptr<const std::vector<double>> points_;
};

Grid make_grid(int n);

}  // namespace stokeslab::spectral
