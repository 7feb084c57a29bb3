#include "stokeslab/spectral/multiplier.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "stokeslab/error.hpp"

namespace stokeslab::spectral {

SpectralMultiplier::SpectralMultiplier(int n, std::vector<std::complex<double>> symbol, Parity parity)
    : n_(n), symbol_(std::move(symbol)), parity_(parity) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("multiplier size must be even, got " + std::to_string(n));
  if (static_cast<int>(symbol_.size()) != n / 2 + 1)
    throw InvalidArgument("multiplier symbol needs N/2+1 entries");
}

std::complex<double> SpectralMultiplier::operator()(int k) const {
  if (std::abs(k) > n_ / 2) throw InvalidArgument("wavenumber " + std::to_string(k) + " beyond N/2");
  auto s = symbol_[static_cast<std::size_t>(std::abs(k))];
  return k < 0 ? std::conj(s) : s;
}

SpectralMultiplier operator*(const SpectralMultiplier& a, const SpectralMultiplier& b) {
  if (a.n_ != b.n_) throw InvalidArgument("composing multipliers of different sizes");
  std::vector<std::complex<double>> s(a.symbol_.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.symbol_[k] * b.symbol_[k];
  Parity p = a.parity_ == b.parity_ ? Parity::even_real : Parity::odd_imaginary;
  return SpectralMultiplier(a.n_, std::move(s), p);
}

DepthMode DepthMode::finite(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("depth must be positive and finite");
  return DepthMode(Kind::finite, h);
}

DepthMode DepthMode::parse(std::string_view text) {
  if (text == "deep" || text == "infinite") return infinite();
  if (text == "toy") return toy();
  constexpr std::string_view prefix = "depth=";
  if (text.starts_with(prefix)) {
    auto rest = text.substr(prefix.size());
    double h = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), h);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) return finite(h);
  }
  throw InvalidArgument("unknown depth mode '" + std::string(text) + "' (expected deep, toy or depth=<h>)");
}

double DepthMode::symbol(int k) const noexcept {
  if (k == 0) return 0.0;
  const double n = k;
  switch (kind_) {
    case Kind::infinite:
      return std::abs(n);
    case Kind::toy:
      return n * n;
    case Kind::finite:
      return n / std::tanh(depth_ * n);
  }
  return 0.0;
}

std::string DepthMode::label() const {
  switch (kind_) {
    case Kind::infinite:
      return "deep";
    case Kind::toy:
      return "toy";
    case Kind::finite: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, depth_);
      return "depth=" + std::string(buf, ptr);
    }
  }
  return {};
}

SpectralMultiplier k_multiplier(const DepthMode& mode, int n) {
  std::vector<std::complex<double>> s(static_cast<std::size_t>(n / 2 + 1));
  for (int k = 0; k <= n / 2; ++k) s[static_cast<std::size_t>(k)] = mode.symbol(k);
  return SpectralMultiplier(n, std::move(s), Parity::even_real);
}

SpectralMultiplier hilbert_multiplier(int n) {
  std::vector<std::complex<double>> s(static_cast<std::size_t>(n / 2 + 1), {0.0, 1.0});
  s[0] = 0.0;
  return SpectralMultiplier(n, std::move(s), Parity::odd_imaginary);
}

SpectralMultiplier derivative_multiplier(int n) {
  std::vector<std::complex<double>> s(static_cast<std::size_t>(n / 2 + 1));
  for (int k = 0; k <= n / 2; ++k) s[static_cast<std::size_t>(k)] = {0.0, double(k)};
  return SpectralMultiplier(n, std::move(s), Parity::odd_imaginary);
}

void apply_in_place(Spectrum& coeffs, const SpectralMultiplier& m) {
  auto sym = m.symbol();
  if (coeffs.size() != sym.size())
    throw InvalidArgument("spectrum of " + std::to_string(coeffs.size()) + " modes against multiplier of " +
                          std::to_string(sym.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] *= sym[k];
}

PeriodicProfile apply_multiplier(const PeriodicProfile& f, const SpectralMultiplier& m) {
  if (f.size() != m.size())
    throw InvalidArgument("profile of size " + std::to_string(f.size()) + " against multiplier of size " +
                          std::to_string(m.size()));
  Spectrum c = f.coefficients();
  apply_in_place(c, m);
  return PeriodicProfile::from_coefficients(f.grid(), c);
}

}  // namespace stokeslab::spectral
