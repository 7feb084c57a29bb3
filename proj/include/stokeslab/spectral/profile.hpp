#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "stokeslab/spectral/fft.hpp"
#include "stokeslab/spectral/grid.hpp"

namespace stokeslab::spectral {

/// Real samples of a 2π-periodic function on a staggered grid.
class PeriodicProfile {
 public:
  PeriodicProfile(Grid grid, std::vector<double> values);

  static PeriodicProfile constant(const Grid& grid, double value);

  template <class F>
  static PeriodicProfile from_function(const Grid& grid, F&& f) {
    std::vector<double> v(static_cast<std::size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) v[static_cast<std::size_t>(j)] = f(grid.point(j));
    return PeriodicProfile(grid, std::move(v));
  }

  static PeriodicProfile from_coefficients(const Grid& grid,
                                           std::span<const std::complex<double>> coeffs);

  /// η(u) = Σ_k a_k cos(ku), k = 0 … len−1.
  static PeriodicProfile from_cosine_coefficients(const Grid& grid, std::span<const double> a);

  const Grid& grid() const noexcept { return grid_; }
  int size() const noexcept { return grid_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](int j) const noexcept { return values_[static_cast<std::size_t>(j)]; }

  Spectrum coefficients() const;

  /// Cosine amplitudes a_0 … a_{N/2−1} of the even part.
  std::vector<double> cosine_coefficients() const;

  /// Trigonometric interpolant evaluated at an arbitrary u.
  double evaluate(double u) const;

  double max_abs() const noexcept;
  double max() const noexcept;
  double min() const noexcept;
  double mean() const noexcept;

  PeriodicProfile& operator+=(const PeriodicProfile& other);
  PeriodicProfile& operator-=(const PeriodicProfile& other);
  PeriodicProfile& operator*=(double s) noexcept;
  PeriodicProfile& operator+=(double s) noexcept;

  friend PeriodicProfile operator+(PeriodicProfile a, const PeriodicProfile& b) { return a += b; }
  friend PeriodicProfile operator-(PeriodicProfile a, const PeriodicProfile& b) { return a -= b; }
  friend PeriodicProfile operator*(PeriodicProfile a, double s) { return a *= s; }
  friend PeriodicProfile operator*(double s, PeriodicProfile a) { return a *= s; }
  friend PeriodicProfile operator+(PeriodicProfile a, double s) { return a += s; }
  friend PeriodicProfile operator-(PeriodicProfile a) { return a *= -1.0; }

  /// Pointwise product on the grid (no dealiasing).
  friend PeriodicProfile pointwise_product(const PeriodicProfile& a, const PeriodicProfile& b);

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// max_j |a_j − b_j|.
double max_difference(const PeriodicProfile& a, const PeriodicProfile& b);

}  // namespace stokeslab::spectral
