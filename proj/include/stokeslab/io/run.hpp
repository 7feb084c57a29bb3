#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "stokeslab/babenko/continuation.hpp"
#include "stokeslab/singularity/fitting.hpp"

namespace stokeslab::io {

enum class Command { solve, extend, analyze, verify };

Command parse_command(std::string_view name);

/// Reference level for crest fits in `analyze`.
enum class FitLevel {
  crest,     ///< η(0), the spectral crest value
  bernoulli  ///< c²/2
};

struct RunConfig {
  Command command = Command::solve;
  std::optional<int> n;  ///< default 256 for fresh branches; must match a resumed file
  spectral::DepthMode mode = spectral::DepthMode::infinite();
  double height = 0.002;  ///< solve height, or seed height of a fresh branch
  std::optional<double> to_height;
  double tol = 1e-12;
  int max_iters = 25;
  bool dealias = true;
  double tail_abort = 0.01;
  babenko::StepControl step;
  std::filesystem::path branch;
  std::filesystem::path out;
  std::optional<singularity::FitWindow> window;
  bool subleading = false;
  FitLevel level = FitLevel::crest;
  std::optional<std::filesystem::path> export_dir;

  /// Throws ConfigError when required paths or values are missing.
  void validate() const;
  babenko::SolverConfig solver() const;
};

inline constexpr int kDefaultN = 256;

/// Executes one command. Progress and summaries go to `log`; errors are
/// thrown as stokeslab::Error subclasses.
void run(const RunConfig& config, std::ostream& log);

}  // namespace stokeslab::io
