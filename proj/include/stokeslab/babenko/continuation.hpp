#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stokeslab/babenko/newton.hpp"

namespace stokeslab::babenko {

struct StepControl {
  double initial_step = 0.05;
  double max_step = 0.05;
  double min_step = 1e-3;
  double growth = 1.5;  ///< applied to the previous step after each success
};

enum class StopReason {
  target_reached,
  tail_abort,          ///< tail_fraction exceeded SolverConfig::tail_abort
  crest_limit,         ///< converged iterates overshoot c²/2 and steps hit min_step
  convergence_failure  ///< Newton failures drove the step below min_step
};

std::string_view to_string(StopReason reason);
StopReason stop_reason_from_string(std::string_view text);

struct BranchEntry {
  double height;  ///< continuation parameter s
  WaveState state;
  std::vector<double> cos_coeffs;
  Diagnostics diagnostics;
};

struct WaveBranch {
  std::vector<BranchEntry> entries;
  StopReason stop = StopReason::target_reached;
  bool truncated = false;

  bool empty() const noexcept { return entries.empty(); }
  std::size_t size() const noexcept { return entries.size(); }
};

/// Solves the seed at its own height, then steps the height toward target
/// with a secant predictor in (a, c). Failed or overshooting steps are
/// halved; successful ones grow by StepControl::growth up to max_step.
///
/// Throws InvalidArgument when target does not exceed the seed height and
/// ConvergenceFailure when the seed cannot be solved or no step succeeds
/// because of solver failures.
WaveBranch continue_branch(const WaveState& seed, double target_height, const SolverConfig& config,
                           const StepControl& step = {});

/// Resumes a branch from its last two entries. Only newly computed entries
/// are returned; the trial step is derived from the last accepted one, so
/// a resumed run reproduces an uninterrupted one with the same schedule.
WaveBranch extend_branch(const WaveBranch& existing, double target_height, const SolverConfig& config,
                         const StepControl& step = {});

/// Initial guess (s/2)·cos u, c = 1.
WaveState small_amplitude_seed(int n, double height, const DepthMode& mode);

}  // namespace stokeslab::babenko
