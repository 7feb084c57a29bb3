#include "stokeslab/singularity/lemma.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "stokeslab/error.hpp"
#include "stokeslab/spectral/multiplier.hpp"
#include "stokeslab/spectral/power.hpp"

namespace stokeslab::singularity {

namespace {

constexpr double kPi = std::numbers::pi;

struct Row {
  double sup = 0.0;
  double diff_sup = 0.0;
  double inner = 0.0;
};

spectral::PeriodicProfile hilbert_of_power(double p, const spectral::Grid& grid, bool is_signed, PowerInput input) {
  const int n = grid.size();
  if (input == PowerInput::sampled)
    return spectral::apply_multiplier(spectral::sample_power(p, grid, is_signed), spectral::hilbert_multiplier(n));
  auto c = spectral::power_coefficients(p, n, is_signed);
  const double m = n / 2;
  c[0] = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k)
    c[k] *= std::complex<double>(0.0, 0.5 * (1.0 + std::cos(kPi * static_cast<double>(k) / m)));
  return spectral::PeriodicProfile::from_coefficients(grid, c);
}

Row evaluate(double nu, bool is_signed, double u0, int n, PowerInput input) {
  const spectral::Grid grid(n);
  const auto hf = hilbert_of_power(nu - 1.0, grid, is_signed, input);
  const double coef = lemma_coefficient(nu, is_signed);
  Row row;
  row.inner = kLemmaExclusion * grid.spacing();
  auto inside = [&](double u) { return std::abs(u) >= row.inner && std::abs(u) < u0; };
  std::vector<double> rem(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double u = grid.point(j);
    double pred = coef * std::pow(std::abs(u), nu - 1.0);
    if (!is_signed && u < 0.0) pred = -pred;
    rem[static_cast<std::size_t>(j)] = hf[j] - pred;
    if (inside(u)) row.sup = std::max(row.sup, std::abs(rem[static_cast<std::size_t>(j)]));
  }
  for (int j = 0; j + 1 < n; ++j) {
    const double a = grid.point(j), b = grid.point(j + 1);
    if (inside(a) && inside(b) && (a > 0.0) == (b > 0.0))
      row.diff_sup = std::max(
          row.diff_sup,
          std::abs(rem[static_cast<std::size_t>(j + 1)] - rem[static_cast<std::size_t>(j)]) / grid.spacing());
  }
  return row;
}

}  // namespace

unsigned worker_limit() {
  if (const char* env = std::getenv("STOKESLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double lemma_coefficient(double nu, bool is_signed) {
  return is_signed ? std::tan(kPi * nu / 2.0) : -1.0 / std::tan(kPi * nu / 2.0);
}

LemmaReport lemma_remainder_report(double nu, bool is_signed, double u0, const std::vector<int>& resolutions,
                                   PowerInput input) {
  if (!(nu > 0.0 && nu < 1.0)) throw InvalidArgument("nu must lie in (0, 1)");
  if (!(u0 > 0.0 && u0 < kPi)) throw InvalidArgument("u0 must lie in (0, pi)");
  if (resolutions.empty()) throw InvalidArgument("at least one resolution required");
  for (std::size_t i = 0; i < resolutions.size(); ++i) {
    spectral::Grid check(resolutions[i]);
    if (i > 0 && resolutions[i] <= resolutions[i - 1]) throw InvalidArgument("resolutions must increase");
  }

  std::vector<Row> rows(resolutions.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();)
      rows[i] = evaluate(nu, is_signed, u0, resolutions[i], input);
  };
  const unsigned workers = std::min<unsigned>(worker_limit(), static_cast<unsigned>(rows.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  LemmaReport r;
  r.nu = nu;
  r.is_signed = is_signed;
  r.u0 = u0;
  r.coefficient = lemma_coefficient(nu, is_signed);
  r.resolutions = resolutions;
  for (const auto& row : rows) {
    r.remainder_sup.push_back(row.sup);
    r.difference_sup.push_back(row.diff_sup);
    r.inner_edge.push_back(row.inner);
  }
  const std::size_t n = rows.size();
  r.convergence_ratio = n >= 2 ? rows[n - 1].sup / rows[n - 2].sup : 1.0;
  return r;
}

}  // namespace stokeslab::singularity
