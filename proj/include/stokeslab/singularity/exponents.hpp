#pragma once

#include <functional>
#include <vector>

namespace stokeslab::singularity {

/// Distance from a tangent pole below which grant_lhs refuses to evaluate.
inline constexpr double kPoleGuard = 1e-8;
/// Guard band around μ = 1 used by the root bracketing.
inline constexpr double kBracketGuard = 1e-6;

/// (μ + 2/3)·tan(πμ/2 + π/3) + μ·tan(πμ/2) + 2/√3.
/// Throws PoleProximity within kPoleGuard of μ ≡ 1/3 or μ ≡ 1 (mod 2).
double grant_lhs(double mu);

/// 1 + 2cos(πβ).
double leading_balance(double beta);

/// −AB[(μ + 2/3)tan(πμ/2 + π/3) + μ tan(πμ/2) + 2/√3], the coefficient of
/// |u|^{μ−1/3} left after the quadratic terms interact with B|u|^μ.
double subleading_coefficient(double A, double B, double mu);

struct ExponentReport {
  double beta_root = 0.0;                  ///< root of 1 + 2cos(πβ) in (1/2, 1)
  std::vector<double> beta_roots_low;      ///< roots in (0, 1/2); expected empty
  double grant_first_root = 2.0 / 3.0;     ///< analytic root, reported separately
  std::vector<double> grant_roots;         ///< roots in (2/3, 2) away from the pole
};

ExponentReport find_exponents();

/// Sign-change scan of f over [lo, hi] with `samples` subintervals and
/// bisection to `tol`. A bracket is kept only when f is finite at both ends
/// and |f| at the refined point is below `accept`.
std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi, int samples,
                                  double tol = 1e-14, double accept = 1e-6);

}  // namespace stokeslab::singularity
