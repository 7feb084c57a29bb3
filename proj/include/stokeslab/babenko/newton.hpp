#pragma once

#include <Eigen/Core>

#include <span>
#include <variant>
#include <vector>

#include "stokeslab/babenko/wave.hpp"

namespace stokeslab::babenko {

struct FixedSpeed {};

/// Adds c as an unknown and the equation η(0) − η(π) = height.
struct FixedHeight {
  double height;
};

using Constraint = std::variant<FixedSpeed, FixedHeight>;

struct NewtonResult {
  WaveState state;
  std::vector<double> cos_coeffs;  ///< a_0 … a_{N/2−1}; state.profile is built from these
  int iterations = 0;
  double residual_norm = 0.0;
};

/// Newton iteration on the cosine coefficients of an even profile.
///
/// The Jacobian is assembled in closed form (or column by column from
/// jacobian_apply when dealiasing is off) and LU-factorized at every
/// iterate, including the first, so a singular linearization is reported
/// even when the initial state already solves the equation.
///
/// Throws SingularJacobian, ConvergenceFailure, or InvalidArgument for an
/// initial profile that is not even.
NewtonResult newton_solve_detailed(const WaveState& initial, const Constraint& constraint,
                                   const SolverConfig& config);

WaveState newton_solve(const WaveState& initial, const Constraint& constraint, const SolverConfig& config);

/// Dense Jacobian of the cosine-projected residual with respect to
/// (a_0 … a_{M−1}[, c]), plus the height row when with_speed is set.
Eigen::MatrixXd cosine_jacobian(const WaveState& state, std::span<const double> cos_coeffs, bool with_speed,
                                bool dealias);

}  // namespace stokeslab::babenko
