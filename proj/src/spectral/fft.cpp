#include "stokeslab/spectral/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "stokeslab/error.hpp"

namespace stokeslab::spectral {

namespace {

struct Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.r2c);
      fftw_destroy_plan(p.c2r);
    }
  }

  Plans get(int n) {
    std::lock_guard lock(mu_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    // The planner needs scratch arrays; execution uses the new-array API.
    double* r = fftw_alloc_real(static_cast<std::size_t>(n));
    fftw_complex* c = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
    Plans p;
    p.r2c = fftw_plan_dft_r2c_1d(n, r, c, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r_1d(n, c, r, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(r);
    fftw_free(c);
    plans_.emplace(n, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<int, Plans> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

Spectrum forward_coefficients(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 2 || n % 2 != 0)
    throw InvalidArgument("sample count must be even, got " + std::to_string(n));
  const int m = n / 2;
  Spectrum out(static_cast<std::size_t>(m + 1));
  // r2c does not modify its input.
  fftw_execute_dft_r2c(cache().get(n).r2c, const_cast<double*>(samples.data()), as_fftw(out.data()));
  const double u0 = -std::numbers::pi + std::numbers::pi / n;
  for (int k = 0; k <= m; ++k) out[static_cast<std::size_t>(k)] *= std::polar(1.0 / n, -k * u0);
  out[static_cast<std::size_t>(m)] *= 0.5;
  return out;
}

std::vector<double> evaluate_on_grid(std::span<const std::complex<double>> coeffs, int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("grid size must be even, got " + std::to_string(n));
  const int m = n / 2;
  const double u0 = -std::numbers::pi + std::numbers::pi / n;
  std::vector<std::complex<double>> x(static_cast<std::size_t>(m + 1));
  const int kmax = std::min<int>(m, static_cast<int>(coeffs.size()) - 1);
  for (int k = 0; k <= kmax; ++k)
    x[static_cast<std::size_t>(k)] = coeffs[static_cast<std::size_t>(k)] * std::polar(1.0, k * u0);
  if (kmax == m) x[static_cast<std::size_t>(m)] = 2.0 * x[static_cast<std::size_t>(m)].real();
  x[0] = x[0].real();
  std::vector<double> out(static_cast<std::size_t>(n));
  fftw_execute_dft_c2r(cache().get(n).c2r, as_fftw(x.data()), out.data());
  return out;
}

}  // namespace stokeslab::spectral
