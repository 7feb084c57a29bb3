#include "stokeslab/babenko/newton.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <string>

#include "stokeslab/babenko/operators.hpp"
#include "stokeslab/error.hpp"

namespace stokeslab::babenko {

namespace {

constexpr double kMinRcond = 1e-14;

// ½ f_m cos((m±j)u) for every m, truncated to the first M cosines.
void add_shifted_product(std::span<const double> f, int j, double scale, Eigen::Ref<Eigen::VectorXd> out) {
  const int m_count = static_cast<int>(out.size());
  for (int m = 0; m < static_cast<int>(f.size()); ++m) {
    const double v = 0.5 * scale * f[static_cast<std::size_t>(m)];
    if (v == 0.0) continue;
    if (m + j < m_count) out(m + j) += v;
    out(std::abs(m - j)) += v;
  }
}

}  // namespace

Eigen::MatrixXd cosine_jacobian(const WaveState& state, std::span<const double> a, bool with_speed,
                                bool dealias) {
  const int m = static_cast<int>(a.size());
  const int dim = m + (with_speed ? 1 : 0);
  const double c = state.speed;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<double> k(static_cast<std::size_t>(m)), g(static_cast<std::size_t>(m));
  for (int n = 0; n < m; ++n) {
    k[static_cast<std::size_t>(n)] = state.mode.symbol(n);
    g[static_cast<std::size_t>(n)] = k[static_cast<std::size_t>(n)] * a[static_cast<std::size_t>(n)];
  }

  if (dealias) {
    Eigen::VectorXd p(m);
    for (int j = 0; j < m; ++j) {
      const double kj = k[static_cast<std::size_t>(j)];
      auto col = J.col(j).head(m);
      p.setZero();
      add_shifted_product(a, j, 1.0, p);
      for (int n = 0; n < m; ++n) col(n) -= (kj + k[static_cast<std::size_t>(n)]) * p(n);
      add_shifted_product(g, j, -1.0, col);
      col(j) += c * c * kj - 1.0;
    }
  } else {
    const Grid& grid = state.profile.grid();
    std::vector<double> e(static_cast<std::size_t>(m), 0.0);
    for (int j = 0; j < m; ++j) {
      std::fill(e.begin(), e.end(), 0.0);
      e[static_cast<std::size_t>(j)] = 1.0;
      auto dir = PeriodicProfile::from_cosine_coefficients(grid, e);
      auto col = jacobian_apply(state, dir, false).cosine_coefficients();
      for (int n = 0; n < m; ++n) J(n, j) = col[static_cast<std::size_t>(n)];
    }
  }

  if (with_speed) {
    for (int n = 0; n < m; ++n) J(n, m) = 2.0 * c * g[static_cast<std::size_t>(n)];
    for (int n = 1; n < m; n += 2) J(m, n) = 2.0;
  }
  return J;
}

NewtonResult newton_solve_detailed(const WaveState& initial, const Constraint& constraint,
                                   const SolverConfig& config) {
  config.validate();
  const PeriodicProfile& eta0 = initial.profile;
  if (evenness_defect(eta0) > 1e-10 * std::max(1.0, eta0.max_abs()))
    throw InvalidArgument("initial profile must be even about u = 0");

  const Grid grid = eta0.grid();
  const auto* fixed_height = std::get_if<FixedHeight>(&constraint);
  const bool with_speed = fixed_height != nullptr;

  std::vector<double> a = eta0.cosine_coefficients();
  const int m = static_cast<int>(a.size());
  double c = initial.speed;
  double last = 0.0;

  for (int it = 0;; ++it) {
    WaveState state = WaveState::from_cosine_coefficients(grid, a, c, initial.mode);
    PeriodicProfile r = residual(state, config.dealias);
    const double rnorm = r.max_abs();
    const double hres = with_speed ? wave_height(a) - fixed_height->height : 0.0;
    last = std::max(rnorm, std::abs(hres));
    if (!std::isfinite(last) || !std::isfinite(c))
      throw ConvergenceFailure("Newton iterate diverged", last, it);

    Eigen::MatrixXd J = cosine_jacobian(state, a, with_speed, config.dealias);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(J);
    // rcond() misreports exactly zero pivots, so the pivot ratio is checked as well.
    const auto piv = lu.matrixLU().diagonal().cwiseAbs();
    const double rc = std::min(lu.rcond(), piv.minCoeff() / piv.maxCoeff());
    if (!(rc > kMinRcond))
      throw SingularJacobian("Jacobian is singular at c = " + std::to_string(c) +
                             " (rcond " + std::to_string(rc) + ")");

    if (last <= config.newton_tol) return NewtonResult{std::move(state), std::move(a), it, rnorm};
    if (it >= config.max_iters)
      throw ConvergenceFailure("Newton did not converge in " + std::to_string(config.max_iters) +
                                   " iterations",
                               last, it);

    auto rc_coeffs = r.cosine_coefficients();
    Eigen::VectorXd rhs(J.rows());
    for (int n = 0; n < m; ++n) rhs(n) = -rc_coeffs[static_cast<std::size_t>(n)];
    if (with_speed) rhs(m) = -hres;
    Eigen::VectorXd dx = lu.solve(rhs);
    for (int n = 0; n < m; ++n) a[static_cast<std::size_t>(n)] += dx(n);
    if (with_speed) c += dx(m);
  }
}

WaveState newton_solve(const WaveState& initial, const Constraint& constraint, const SolverConfig& config) {
  return newton_solve_detailed(initial, constraint, config).state;
}

}  // namespace stokeslab::babenko
