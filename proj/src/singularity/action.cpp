#include "stokeslab/singularity/action.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stokeslab/babenko/operators.hpp"
#include "stokeslab/error.hpp"
#include "stokeslab/spectral/multiplier.hpp"
#include "stokeslab/spectral/power.hpp"

namespace stokeslab::singularity {

namespace {

using spectral::Grid;
using spectral::PeriodicProfile;

constexpr double kPi = std::numbers::pi;

PeriodicProfile k_infinity(const PeriodicProfile& f) {
  return spectral::apply_multiplier(f, spectral::k_multiplier(spectral::DepthMode::infinite(), f.size()));
}

struct WindowData {
  std::vector<int> idx;
  std::vector<double> u;
};

WindowData window_data(const Grid& grid, FitWindow window) {
  WindowData w;
  w.idx = checked_window(grid, window, 10.0 * grid.spacing(), 0.5, 8);
  for (int j : w.idx) w.u.push_back(grid.point(j));
  return w;
}

std::vector<double> gather(const PeriodicProfile& f, const std::vector<int>& idx) {
  std::vector<double> y;
  y.reserve(idx.size());
  for (int j : idx) y.push_back(f[j]);
  return y;
}

BasisFunction power_of(double e) {
  return [e](double u) { return std::pow(u, e); };
}

BasisFunction constant_one() {
  return [](double) { return 1.0; };
}

}  // namespace

double predicted_action_coefficient(double p) {
  if (std::abs(p - 1.0) < 1e-12)
    throw LogCase("p = 1 produces a logarithm, not a power; use log_case_check");
  if (!(p > 0.0 && p < 2.0)) throw InvalidArgument("action exponent must lie in (0,1) or (1,2)");
  return -p * std::tan(kPi * p / 2.0);
}

double measured_action_coefficient(double p, int n, FitWindow window) {
  predicted_action_coefficient(p);  // same domain checks
  const Grid grid(n);
  const auto w = window_data(grid, window);
  const auto kf = k_infinity(spectral::sample_power(p, grid, false));
  const BasisFunction basis[] = {power_of(p - 1.0), constant_one(), power_of(2.0), power_of(4.0)};
  return least_squares(w.u, gather(kf, w.idx), basis).coefficients[0];
}

LogCaseReport log_case_check(int n) {
  const Grid grid(n);
  return log_case_check(n, FitWindow{10.0 * grid.spacing(), 0.1});
}

LogCaseReport log_case_check(int n, FitWindow window) {
  const Grid grid(n);
  const auto w = window_data(grid, window);
  const BasisFunction ln = [](double u) { return std::log(u); };

  LogCaseReport r;
  r.n = n;
  r.window = window;
  r.expected = 2.0 / kPi;
  const BasisFunction log_basis[] = {ln, constant_one()};
  r.log_coefficient =
      least_squares(w.u, gather(k_infinity(spectral::sample_power(1.0, grid, false)), w.idx), log_basis)
          .coefficients[0];
  r.relative_error = std::abs(r.log_coefficient - r.expected) / r.expected;

  const BasisFunction smooth_basis[] = {ln, constant_one(), power_of(2.0)};
  r.smooth_log_coefficient =
      least_squares(w.u, gather(k_infinity(spectral::sample_power(2.0, grid, false)), w.idx), smooth_basis)
          .coefficients[0];
  return r;
}

CancellationReport cancellation_check(double A, int n, FitWindow window) {
  if (!(A > 0.0)) throw InvalidArgument("cancellation_check needs A > 0");
  if (n < 4096) throw InvalidArgument("cancellation_check needs N >= 4096, got " + std::to_string(n));
  const Grid grid(n);
  const auto w = window_data(grid, window);

  const PeriodicProfile f = A * spectral::sample_power(2.0 / 3.0, grid, false);
  const PeriodicProfile f2 = A * A * spectral::sample_power(4.0 / 3.0, grid, false);
  const PeriodicProfile g1 = pointwise_product(f, k_infinity(f));
  const PeriodicProfile g2 = 0.5 * k_infinity(f2);
  const PeriodicProfile t = babenko::fixed_point_map(f, 1.0) + (-0.5);

  const BasisFunction basis[] = {power_of(1.0 / 3.0), constant_one(), power_of(2.0 / 3.0), power_of(2.0)};
  auto lead = [&](const PeriodicProfile& g) { return least_squares(w.u, gather(g, w.idx), basis).coefficients[0]; };

  CancellationReport r;
  r.A = A;
  r.n = n;
  r.window = window;
  r.expected = 2.0 * A * A / std::sqrt(3.0);
  r.product_term = lead(g1);
  r.half_k_square = lead(g2);
  r.sum = lead(g1 + g2);
  r.fixed_point_term = lead(t);
  return r;
}

}  // namespace stokeslab::singularity
