#include "stokeslab/spectral/hilbert_quadrature.hpp"

#include <cmath>
#include <numbers>

#include "stokeslab/error.hpp"

namespace stokeslab::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

double alternating(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

// Trigonometric interpolant (even N) in barycentric form.
double barycentric_value(const PeriodicProfile& f, double u) {
  double num = 0.0, den = 0.0;
  for (int j = 0; j < f.size(); ++j) {
    double w = alternating(j) / std::tan(0.5 * (u - f.grid().point(j)));
    num += w * f[j];
    den += w;
  }
  return num / den;
}

// Derivative of the interpolant at node k.
double node_derivative(const PeriodicProfile& f, int k) {
  const auto& g = f.grid();
  double s = 0.0;
  for (int j = 0; j < f.size(); ++j) {
    if (j == k) continue;
    s += 0.5 * alternating(k - j) / std::tan(0.5 * (g.point(k) - g.point(j))) * f[j];
  }
  return s;
}

}  // namespace

double hilbert_pv_quadrature(const PeriodicProfile& f, double u, int terms) {
  if (!(u > -kPi && u < kPi)) throw InvalidArgument("evaluation point must lie in (-pi, pi)");
  if (terms < 1) throw InvalidArgument("terms must be >= 1");
  const auto& g = f.grid();
  const int n = f.size();
  const double h = g.spacing();

  int k = static_cast<int>(std::floor((u + kPi) / h));
  if (k >= n) k = n - 1;
  if (k + 1 < n && std::abs(g.point(k + 1) - u) < std::abs(g.point(k) - u)) ++k;
  const bool at_node = std::abs(g.point(k) - u) < 1e-12;
  const double fu = at_node ? f[k] : barycentric_value(f, u);

  double total = 0.0;
  for (int m = -terms; m <= terms; ++m) {
    const double shift = 2.0 * kPi * m;
    for (int j = 0; j < n; ++j) {
      if (m == 0 && at_node && j == k) {
        total += h * node_derivative(f, k);
        continue;
      }
      total += h * (f[j] - fu) / (g.point(j) - u + shift);
    }
  }

  // p.v. integral of fu over the 2·terms+1 concatenated images.
  const double span = (2.0 * terms + 1.0) * kPi;
  total += fu * std::log((span - u) / (span + u));

  // Images beyond |m| = terms: the m and −m pair contributes −2·m1/(2πm)² at leading order.
  double m1 = 0.0;
  for (int j = 0; j < n; ++j) m1 += h * (g.point(j) - u) * f[j];
  double zeta2_tail = kPi * kPi / 6.0;
  for (int m = 1; m <= terms; ++m) zeta2_tail -= 1.0 / (double(m) * m);
  total += -2.0 * m1 / (4.0 * kPi * kPi) * zeta2_tail;

  return total / kPi;
}

}  // namespace stokeslab::spectral
