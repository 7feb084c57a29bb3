#include "stokeslab/spectral/power.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <string>

#include "stokeslab/error.hpp"

namespace stokeslab::spectral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kLaguerreNodes = 80;

struct Rule {
  Eigen::VectorXd x, w;
};

// Golub–Welsch for the weight e^{-y} on (0, ∞).
Rule build_laguerre() {
  const int n = kLaguerreNodes;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = 2.0 * i + 1.0;
    if (i + 1 < n) J(i, i + 1) = J(i + 1, i) = i + 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule r{es.eigenvalues(), Eigen::VectorXd(n)};
  for (int i = 0; i < n; ++i) {
    double v = es.eigenvectors()(0, i);
    r.w(i) = v * v;
  }
  return r;
}

const Rule& laguerre() {
  static const Rule r = build_laguerre();
  return r;
}

// ∫_X^∞ t^p e^{it} dt, rotated onto t = X + iy.
std::complex<double> oscillatory_tail(double x, double p) {
  const Rule& r = laguerre();
  std::complex<double> s = 0.0;
  for (int i = 0; i < r.x.size(); ++i) s += r.w(i) * std::pow(std::complex<double>(x, r.x(i)), p);
  return std::complex<double>(0.0, 1.0) * std::polar(1.0, x) * s;
}

void check_exponent(double p) {
  if (!(p > -1.0) || !std::isfinite(p))
    throw InvalidArgument("power exponent must exceed -1, got " + std::to_string(p));
}

}  // namespace

PeriodicProfile sample_power(double p, const Grid& grid, bool is_signed) {
  check_exponent(p);
  return PeriodicProfile::from_function(grid, [&](double u) {
    double v = std::pow(std::abs(u), p);
    return is_signed && u < 0.0 ? -v : v;
  });
}

Spectrum power_coefficients(double p, int n, bool is_signed) {
  check_exponent(p);
  if (n < 2 || n % 2 != 0) throw InvalidArgument("coefficient count must come from an even N");
  const double a = p + 1.0;
  const double ga = std::tgamma(a);
  Spectrum c(static_cast<std::size_t>(n / 2 + 1));
  c[0] = is_signed ? 0.0 : std::pow(kPi, a) / (a * kPi);
  for (int k = 1; k <= n / 2; ++k) {
    const auto tail = oscillatory_tail(k * kPi, p);
    const double scale = std::pow(double(k), -a);
    if (is_signed) {
      double s = scale * (ga * std::sin(kPi * a / 2.0) - tail.imag());
      c[static_cast<std::size_t>(k)] = {0.0, -s / kPi};
    } else {
      double s = scale * (ga * std::cos(kPi * a / 2.0) - tail.real());
      c[static_cast<std::size_t>(k)] = s / kPi;
    }
  }
  return c;
}

}  // namespace stokeslab::spectral
