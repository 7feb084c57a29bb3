#include "stokeslab/spectral/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "stokeslab/error.hpp"

namespace stokeslab::spectral {

PeriodicProfile::PeriodicProfile(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size())
    throw InvalidArgument("profile has " + std::to_string(values_.size()) + " values for a grid of " +
                          std::to_string(grid_.size()));
  for (double v : values_)
    if (!std::isfinite(v)) throw InvalidArgument("profile values must be finite");
}

PeriodicProfile PeriodicProfile::constant(const Grid& grid, double value) {
  return PeriodicProfile(grid, std::vector<double>(static_cast<std::size_t>(grid.size()), value));
}

PeriodicProfile PeriodicProfile::from_coefficients(const Grid& grid,
                                                   std::span<const std::complex<double>> coeffs) {
  return PeriodicProfile(grid, evaluate_on_grid(coeffs, grid.size()));
}

PeriodicProfile PeriodicProfile::from_cosine_coefficients(const Grid& grid, std::span<const double> a) {
  Spectrum c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = k == 0 ? a[0] : 0.5 * a[k];
  return from_coefficients(grid, c);
}

Spectrum PeriodicProfile::coefficients() const { return forward_coefficients(values_); }

std::vector<double> PeriodicProfile::cosine_coefficients() const {
  Spectrum c = coefficients();
  const std::size_t m = static_cast<std::size_t>(size() / 2);
  std::vector<double> a(m);
  a[0] = c[0].real();
  for (std::size_t k = 1; k < m; ++k) a[k] = 2.0 * c[k].real();
  return a;
}

double PeriodicProfile::evaluate(double u) const {
  Spectrum c = coefficients();
  double s = c[0].real();
  for (std::size_t k = 1; k < c.size(); ++k)
    s += 2.0 * (c[k] * std::polar(1.0, static_cast<double>(k) * u)).real();
  return s;
}

double PeriodicProfile::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double PeriodicProfile::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }
double PeriodicProfile::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }

double PeriodicProfile::mean() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

static void require_same_grid(const PeriodicProfile& a, const PeriodicProfile& b) {
  if (!(a.grid() == b.grid()))
    throw InvalidArgument("profiles live on grids of size " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()));
}

PeriodicProfile& PeriodicProfile::operator+=(const PeriodicProfile& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  return *this;
}

PeriodicProfile& PeriodicProfile::operator-=(const PeriodicProfile& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  return *this;
}

PeriodicProfile& PeriodicProfile::operator*=(double s) noexcept {
  for (auto& v : values_) v *= s;
  return *this;
}

PeriodicProfile& PeriodicProfile::operator+=(double s) noexcept {
  for (auto& v : values_) v += s;
  return *this;
}

PeriodicProfile pointwise_product(const PeriodicProfile& a, const PeriodicProfile& b) {
  require_same_grid(a, b);
  PeriodicProfile out = a;
  for (std::size_t j = 0; j < out.values_.size(); ++j) out.values_[j] *= b.values_[j];
  return out;
}

double max_difference(const PeriodicProfile& a, const PeriodicProfile& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace stokeslab::spectral
