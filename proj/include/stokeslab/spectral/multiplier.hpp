#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stokeslab/spectral/profile.hpp"

namespace stokeslab::spectral {

/// Records whether a symbol is real and even, or imaginary and odd. Both
/// map real fields to real fields.
enum class Parity { even_real, odd_imaginary };

/// Diagonal operator in Fourier space, stored for k = 0 … N/2.
/// Negative wavenumbers follow from symbol(−k) = conj(symbol(k)).
class SpectralMultiplier {
 public:
  SpectralMultiplier(int n, std::vector<std::complex<double>> symbol, Parity parity);

  int size() const noexcept { return n_; }
  Parity parity() const noexcept { return parity_; }
  std::span<const std::complex<double>> symbol() const noexcept { return symbol_; }

  /// Symbol at any |k| ≤ N/2.
  std::complex<double> operator()(int k) const;

  /// Composition: (a·b)(k) = a(k)·b(k).
  friend SpectralMultiplier operator*(const SpectralMultiplier& a, const SpectralMultiplier& b);

 private:
  int n_;
  std::vector<std::complex<double>> symbol_;
  Parity parity_;
};

/// Depth regime of the K operator: n·coth(hn), |n|, or the n² toy symbol.
class DepthMode {
 public:
  enum class Kind { finite, infinite, toy };

  static DepthMode finite(double h);
  static DepthMode infinite() noexcept { return DepthMode(Kind::infinite, 0.0); }
  static DepthMode toy() noexcept { return DepthMode(Kind::toy, 0.0); }

  /// Accepts "deep", "toy" or "depth=<h>".
  static DepthMode parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double depth() const noexcept { return depth_; }
  bool is_deep() const noexcept { return kind_ == Kind::infinite; }

  /// Real symbol of K at wavenumber k (zero at k = 0).
  double symbol(int k) const noexcept;

  /// Inverse of parse().
  std::string label() const;

  friend bool operator==(const DepthMode& a, const DepthMode& b) noexcept {
    return a.kind_ == b.kind_ && a.depth_ == b.depth_;
  }

 private:
  DepthMode(Kind kind, double depth) noexcept : kind_(kind), depth_(depth) {}

  Kind kind_;
  double depth_;
};

SpectralMultiplier k_multiplier(const DepthMode& mode, int n);

/// Periodic Hilbert transform, symbol i·sgn(k). H cos = −sin.
SpectralMultiplier hilbert_multiplier(int n);

/// ∂_u, symbol i·k.
SpectralMultiplier derivative_multiplier(int n);

PeriodicProfile apply_multiplier(const PeriodicProfile& f, const SpectralMultiplier& m);

/// Multiplies a spectrum in place; sizes must agree.
void apply_in_place(Spectrum& coeffs, const SpectralMultiplier& m);

}  // namespace stokeslab::spectral
