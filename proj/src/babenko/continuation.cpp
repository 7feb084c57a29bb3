#include "stokeslab/babenko/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "stokeslab/babenko/operators.hpp"
#include "stokeslab/error.hpp"

namespace stokeslab::babenko {

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::target_reached:
      return "target_reached";
    case StopReason::tail_abort:
      return "tail_abort";
    case StopReason::crest_limit:
      return "crest_limit";
    case StopReason::convergence_failure:
      return "convergence_failure";
  }
  return "unknown";
}

StopReason stop_reason_from_string(std::string_view text) {
  for (auto r : {StopReason::target_reached, StopReason::tail_abort, StopReason::crest_limit,
                 StopReason::convergence_failure})
    if (to_string(r) == text) return r;
  throw InvalidArgument("unknown stop reason '" + std::string(text) + "'");
}

WaveState small_amplitude_seed(int n, double height, const DepthMode& mode) {
  const double a[] = {0.0, 0.5 * height};
  return WaveState::from_cosine_coefficients(Grid(n), a, 1.0, mode);
}

namespace {

void validate(const StepControl& s) {
  if (!(s.min_step > 0.0) || !(s.initial_step >= s.min_step) || !(s.max_step >= s.min_step) ||
      !(s.growth >= 1.0))
    throw ConfigError("step control needs 0 < min_step <= initial_step, max_step and growth >= 1");
}

BranchEntry make_entry(double height, NewtonResult&& r, bool dealias) {
  Diagnostics d = diagnose(r.state, dealias);
  return BranchEntry{height, std::move(r.state), std::move(r.cos_coeffs), d};
}

WaveState predict(const BranchEntry& cur, const BranchEntry* prev, double s_new) {
  const auto& ac = cur.cos_coeffs;
  std::vector<double> a(ac.size());
  double c = cur.state.speed;
  if (prev) {
    const double ratio = (s_new - cur.height) / (cur.height - prev->height);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = ac[k] + ratio * (ac[k] - prev->cos_coeffs[k]);
    c += ratio * (c - prev->state.speed);
  } else {
    const double scale = cur.height > 0.0 ? s_new / cur.height : 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = scale * ac[k];
  }
  return WaveState::from_cosine_coefficients(cur.state.profile.grid(), a, c, cur.state.mode);
}

}  // namespace

WaveBranch extend_branch(const WaveBranch& existing, double target_height, const SolverConfig& config,
                         const StepControl& step) {
  config.validate();
  validate(step);
  if (existing.empty()) throw InvalidArgument("cannot extend an empty branch");
  const std::size_t n = existing.size();
  if (!(target_height > existing.entries.back().height))
    throw InvalidArgument("target height " + std::to_string(target_height) + " does not exceed current height " +
                          std::to_string(existing.entries.back().height));

  BranchEntry cur = existing.entries.back();
  std::optional<BranchEntry> prev;
  if (n >= 2) prev = existing.entries[n - 2];

  auto next_step = [&] {
    double h = prev ? step.growth * (cur.height - prev->height) : step.initial_step;
    return std::min(h, step.max_step);
  };

  WaveBranch out;
  double h = next_step();
  double last_residual = 0.0;
  int last_iterations = 0;
  for (;;) {
    if (cur.height >= target_height) {
      out.stop = StopReason::target_reached;
      break;
    }
    const double s_new = h >= target_height - cur.height ? target_height : cur.height + h;
    StopReason failure = StopReason::convergence_failure;
    try {
      auto r = newton_solve_detailed(predict(cur, prev ? &*prev : nullptr, s_new), FixedHeight{s_new}, config);
      BranchEntry e = make_entry(s_new, std::move(r), config.dealias);
      if (e.diagnostics.crest_gap >= 0.0) {
        out.entries.push_back(e);
        prev = std::move(cur);
        cur = std::move(e);
        if (cur.diagnostics.tail_fraction > config.tail_abort) {
          out.stop = StopReason::tail_abort;
          break;
        }
        h = next_step();
        continue;
      }
      failure = StopReason::crest_limit;
    } catch (const ConvergenceFailure& e) {
      last_residual = e.last_residual();
      last_iterations = e.iterations();
    } catch (const SingularJacobian&) {
    }
    h = 0.5 * (s_new - cur.height);
    if (h < step.min_step) {
      out.stop = failure;
      break;
    }
  }
  out.truncated = out.stop != StopReason::target_reached;
  if (out.entries.empty() && out.stop == StopReason::convergence_failure)
    throw ConvergenceFailure("no continuation step converged from height " + std::to_string(cur.height),
                             last_residual, last_iterations);
  return out;
}

WaveBranch continue_branch(const WaveState& seed, double target_height, const SolverConfig& config,
                           const StepControl& step) {
  config.validate();
  validate(step);
  const double s0 = wave_height(seed.profile);
  if (!(target_height > s0))
    throw InvalidArgument("target height " + std::to_string(target_height) + " does not exceed seed height " +
                          std::to_string(s0));
  WaveBranch branch;
  branch.entries.push_back(make_entry(s0, newton_solve_detailed(seed, FixedHeight{s0}, config), config.dealias));
  WaveBranch rest = extend_branch(branch, target_height, config, step);
  for (auto& e : rest.entries) branch.entries.push_back(std::move(e));
  branch.stop = rest.stop;
  branch.truncated = rest.truncated;
  return branch;
}

}  // namespace stokeslab::babenko
