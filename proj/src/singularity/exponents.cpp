#include "stokeslab/singularity/exponents.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stokeslab/error.hpp"

namespace stokeslab::singularity {

namespace {

constexpr double kPi = std::numbers::pi;
const double kTwoOverRoot3 = 2.0 / std::sqrt(3.0);

double bisect(const std::function<double(double)>& f, double lo, double hi, double flo, double tol) {
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double grant_lhs(double mu) {
  for (double pole : {1.0 / 3.0, 1.0})
    if (std::abs(std::remainder(mu - pole, 2.0)) < kPoleGuard)
      throw PoleProximity("grant_lhs evaluated within " + std::to_string(kPoleGuard) + " of a pole at mu = " +
                          std::to_string(mu));
  return (mu + 2.0 / 3.0) * std::tan(kPi * mu / 2.0 + kPi / 3.0) + mu * std::tan(kPi * mu / 2.0) + kTwoOverRoot3;
}

double leading_balance(double beta) { return 1.0 + 2.0 * std::cos(kPi * beta); }

double subleading_coefficient(double A, double B, double mu) {
  const double t1 = std::tan(kPi * mu / 2.0 + kPi / 3.0);
  const double t2 = std::tan(kPi * mu / 2.0);
  return -A * B * ((mu + 2.0 / 3.0) * t1 + mu * t2 + kTwoOverRoot3);
}

std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi, int samples,
                                  double tol, double accept) {
  std::vector<double> roots;
  if (!(hi > lo) || samples < 1) return roots;
  const double dx = (hi - lo) / samples;
  double x0 = lo, f0 = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x1 = i == samples ? hi : lo + i * dx;
    const double f1 = f(x1);
    if (std::isfinite(f0) && std::isfinite(f1)) {
      if (f0 == 0.0) {
        roots.push_back(x0);
      } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
        const double r = bisect(f, x0, x1, f0, tol);
        if (std::abs(f(r)) < accept) roots.push_back(r);
      }
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) roots.push_back(x0);
  return roots;
}

ExponentReport find_exponents() {
  ExponentReport r;
  r.beta_root = bisect(leading_balance, 0.5, 1.0, leading_balance(0.5), 1e-15);
  r.beta_roots_low = bracket_roots(leading_balance, 0.0, 0.5, 1000);
  r.grant_first_root = 2.0 / 3.0;
  for (auto [lo, hi] : {std::pair{2.0 / 3.0 + kBracketGuard, 1.0 - kBracketGuard},
                        std::pair{1.0 + kBracketGuard, 2.0}})
    for (double x : bracket_roots(grant_lhs, lo, hi, 4000)) r.grant_roots.push_back(x);
  return r;
}

}  // namespace stokeslab::singularity
