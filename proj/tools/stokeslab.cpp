// stokeslab solve|continue|analyze|verify

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "stokeslab/error.hpp"
#include "stokeslab/io/run.hpp"

namespace {

stokeslab::singularity::FitWindow parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw stokeslab::ConfigError("--window expects <lo>:<hi>, got '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    stokeslab::singularity::FitWindow w{std::stod(lo, &a), std::stod(hi, &b)};
    if (a != lo.size() || b != hi.size()) throw std::invalid_argument(text);
    return w;
  } catch (const std::logic_error&) {
    throw stokeslab::ConfigError("--window expects <lo>:<hi>, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stokes waves from Babenko's equation and crest-singularity checks"};
  app.require_subcommand(1);

  stokeslab::io::RunConfig cfg;
  int n = 0;
  std::string mode = "deep", window, level = "crest";
  double to_height = 0.0;
  std::string branch, out, export_dir;

  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--n", n, "grid size (even)");
    sub->add_option("--mode", mode, "deep | toy | depth=<h>")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "Newton tolerance on the residual max-norm")->capture_default_str();
    sub->add_option("--max-iters", cfg.max_iters, "Newton iteration cap")->capture_default_str();
    sub->add_flag("!--no-dealias", cfg.dealias, "pointwise products instead of padded ones");
  };

  auto* solve = app.add_subcommand("solve", "solve one wave of given crest-to-trough height");
  add_solver(solve);
  solve->add_option("--height", cfg.height, "crest-to-trough height s")->capture_default_str();
  solve->add_option("--out", out, "JSON-lines file receiving the record");
  solve->add_option("--branch", branch, "alias for --out");
  solve->add_option("--export", export_dir, "directory for profile and surface CSVs");

  auto* cont = app.add_subcommand("continue", "extend (or start) a branch file up to a target height");
  add_solver(cont);
  cont->add_option("--branch", branch, "JSON-lines branch file")->required();
  cont->add_option("--to-height", to_height, "target height")->required();
  cont->add_option("--height", cfg.height, "seed height for a new branch")->capture_default_str();
  cont->add_option("--step", cfg.step.initial_step, "initial height step")->capture_default_str();
  cont->add_option("--max-step", cfg.step.max_step, "largest height step")->capture_default_str();
  cont->add_option("--min-step", cfg.step.min_step, "smallest height step before giving up")->capture_default_str();
  cont->add_option("--growth", cfg.step.growth, "step growth after a success")->capture_default_str();
  cont->add_option("--tail-abort", cfg.tail_abort, "stop when the spectral tail share exceeds this")
      ->capture_default_str();
  cont->add_option("--export", export_dir, "directory for profile and surface CSVs");

  auto* analyze = app.add_subcommand("analyze", "fit crest exponents along a branch");
  analyze->add_option("--branch", branch, "JSON-lines branch file")->required();
  analyze->add_option("--out", out, "CSV output")->required();
  analyze->add_option("--window", window, "fit window <lo>:<hi> in u (default 10du:0.1)");
  analyze->add_flag("--subleading", cfg.subleading, "also fit B|u|^mu");
  analyze->add_option("--level", level, "crest | bernoulli reference level")->capture_default_str();
  analyze->add_option("--export", export_dir, "directory for profile, surface and fit CSVs");

  auto* verify = app.add_subcommand("verify", "exponent, lemma, action and cancellation checks");
  verify->add_option("--out", out, "JSON report")->required();
  verify->add_option("--n", n, "grid size for the fits (default 16384)");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = stokeslab::io::parse_command(app.get_subcommands().front()->get_name());
    if (n != 0) cfg.n = n;
    cfg.mode = stokeslab::spectral::DepthMode::parse(mode);
    if (cfg.command == stokeslab::io::Command::extend) cfg.to_height = to_height;
    cfg.branch = branch;
    cfg.out = out;
    if (!export_dir.empty()) cfg.export_dir = export_dir;
    if (!window.empty()) cfg.window = parse_window(window);
    if (level == "bernoulli")
      cfg.level = stokeslab::io::FitLevel::bernoulli;
    else if (level != "crest")
      throw stokeslab::ConfigError("--level must be crest or bernoulli");
    stokeslab::io::run(cfg, std::cout);
  } catch (const stokeslab::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const stokeslab::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const stokeslab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const stokeslab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return EXIT_SUCCESS;
}
