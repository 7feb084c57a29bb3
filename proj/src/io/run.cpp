#include "stokeslab/io/run.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "stokeslab/babenko/operators.hpp"
#include "stokeslab/babenko/surface.hpp"
#include "stokeslab/error.hpp"
#include "stokeslab/io/branch_io.hpp"
#include "stokeslab/io/csv.hpp"
#include "stokeslab/io/export.hpp"
#include "stokeslab/io/files.hpp"
#include "stokeslab/io/report.hpp"
#include "stokeslab/singularity/action.hpp"
#include "stokeslab/singularity/crest_fit.hpp"
#include "stokeslab/singularity/exponents.hpp"
#include "stokeslab/singularity/lemma.hpp"

namespace stokeslab::io {

namespace {

using babenko::WaveBranch;

constexpr int kVerifyN = 16384;

// Rounded for tables; files keep full precision.
std::string six(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void require_path(const std::filesystem::path& p, const char* flag, const char* command) {
  if (p.empty()) throw ConfigError(std::string(command) + " needs " + flag);
}

void export_if_requested(const RunConfig& cfg, const WaveBranch& b, std::ostream& log) {
  if (!cfg.export_dir) return;
  auto files = export_plot_data(b, *cfg.export_dir);
  log << "exported " << files.size() << " files to " << cfg.export_dir->string() << "\n";
}

void run_solve(const RunConfig& cfg, std::ostream& log) {
  const auto solver = cfg.solver();
  auto seed = babenko::small_amplitude_seed(solver.n, cfg.height, cfg.mode);
  auto r = babenko::newton_solve_detailed(seed, babenko::FixedHeight{cfg.height}, solver);
  const int iterations = r.iterations;
  WaveBranch b;
  auto d = babenko::diagnose(r.state, solver.dealias);
  b.entries.push_back({cfg.height, std::move(r.state), std::move(r.cos_coeffs), d});
  const auto& out = cfg.out.empty() ? cfg.branch : cfg.out;
  store_branch(b, out);
  log << "solve: s=" << six(cfg.height) << " c=" << format_number(b.entries[0].state.speed)
      << " iterations=" << iterations << " residual=" << six(d.residual_norm) << " -> " << out.string() << "\n";
  export_if_requested(cfg, b, log);
}

void run_extend(const RunConfig& cfg, std::ostream& log) {
  const double target = *cfg.to_height;
  auto solver = cfg.solver();
  WaveBranch existing;
  if (std::filesystem::exists(cfg.branch)) existing = load_branch(cfg.branch);

  WaveBranch added;
  if (!existing.empty()) {
    const auto& last = existing.entries.back();
    const int n_file = last.state.profile.size();
    if (cfg.n && *cfg.n != n_file)
      throw ConfigError("branch file uses N=" + std::to_string(n_file) + " but --n " + std::to_string(*cfg.n) +
                        " was given");
    if (!(last.state.mode == cfg.mode))
      throw ConfigError("branch file uses mode " + last.state.mode.label() + " but " + cfg.mode.label() +
                        " was given");
    if (!(target > last.height))
      throw InvalidArgument("target height " + format_number(target) + " does not exceed current height " +
                            format_number(last.height));
    solver.n = n_file;
    added = babenko::extend_branch(existing, target, solver, cfg.step);
    std::string content = read_file(cfg.branch);
    if (!content.empty() && content.back() != '\n') content += '\n';
    write_file_atomic(cfg.branch, content + format_branch(added));
  } else {
    auto seed = babenko::small_amplitude_seed(solver.n, cfg.height, cfg.mode);
    added = babenko::continue_branch(seed, target, solver, cfg.step);
    store_branch(added, cfg.branch);
  }
  log << "continue: " << added.size() << " new states, stop=" << babenko::to_string(added.stop);
  if (!added.empty()) log << ", last s=" << six(added.entries.back().height);
  log << " -> " << cfg.branch.string() << "\n";
  if (cfg.export_dir) export_if_requested(cfg, load_branch(cfg.branch), log);
}

void run_analyze(const RunConfig& cfg, std::ostream& log) {
  const WaveBranch b = load_branch(cfg.branch);
  if (b.empty()) throw InvalidArgument("branch file " + cfg.branch.string() + " holds no records");

  CsvTable table{{"s", "c", "crest_gap", "beta", "A", "rms", "crest_angle_deg"}, {}};
  if (cfg.subleading) {
    table.header.push_back("mu");
    table.header.push_back("B");
  }
  const double nan = std::nan("");
  const auto& grid = b.entries.front().state.profile.grid();
  const auto window = cfg.window.value_or(singularity::default_crest_window(grid));
  const bool window_ok = window.lo < window.hi;
  if (!window_ok)
    log << "analyze: fit window (" << six(window.lo) << ", " << six(window.hi) << ") is empty at N=" << grid.size()
        << "; pass --window or use a finer grid\n";
  std::vector<singularity::SingularityFit> fits;
  std::vector<double> levels;
  int failed = 0;
  for (const auto& e : b.entries) {
    const auto& st = e.state;
    const double level =
        cfg.level == FitLevel::crest ? babenko::crest_value(st.profile) : 0.5 * st.speed * st.speed;
    std::vector<double> row{e.height, st.speed, e.diagnostics.crest_gap};
    singularity::SingularityFit fit;
    bool ok = window_ok;
    if (ok) {
      try {
        fit = singularity::crest_fit_about(st.profile, level, window, cfg.subleading);
      } catch (const InvalidArgument& ex) {
        ok = false;
        ++failed;
        log << "analyze: s=" << six(e.height) << ": " << ex.what() << "\n";
      }
    }
    row.push_back(ok ? fit.beta : nan);
    row.push_back(ok ? fit.A : nan);
    row.push_back(ok ? fit.rms_residual : nan);
    row.push_back(st.mode.is_deep() ? babenko::physical_surface(st).crest_angle_deg : nan);
    if (cfg.subleading) {
      row.push_back(ok && fit.mu ? *fit.mu : nan);
      row.push_back(ok && fit.B ? *fit.B : nan);
    }
    table.rows.push_back(std::move(row));
    fits.push_back(fit);
    levels.push_back(level);
  }
  write_csv(table, cfg.out);

  log << "analyze: " << b.size() << " states -> " << cfg.out.string() << "\n";
  log << "       s          c  crest_gap       beta          A  angle\n";
  for (const auto& r : table.rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%8s %10s %10s %10s %10s %6s\n", six(r[0]).c_str(), six(r[1]).c_str(),
                  six(r[2]).c_str(), six(r[3]).c_str(), six(r[4]).c_str(), six(r[6]).c_str());
    log << line;
  }
  const std::size_t tail = std::min<std::size_t>(5, table.rows.size());
  bool monotone = true;
  for (std::size_t i = table.rows.size() - tail + 1; i < table.rows.size(); ++i)
    monotone = monotone && table.rows[i][3] < table.rows[i - 1][3];
  log << "beta over the last " << tail << " states " << (monotone ? "decreases" : "does not decrease")
      << "; last beta " << six(table.rows.back()[3]) << " (leading exponent 2/3)";
  if (failed) log << "; " << failed << " fits failed";
  log << "\n";

  if (cfg.export_dir) {
    export_if_requested(cfg, b, log);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!std::isnan(table.rows[i][3]))
        write_fit_csv(b.entries[i].state.profile, levels[i], fits[i], *cfg.export_dir / indexed_name("fit", i));
  }
}

void run_verify(const RunConfig& cfg, std::ostream& log) {
  const int n = cfg.n.value_or(kVerifyN);
  Json report;

  const auto ex = singularity::find_exponents();
  report["exponents"] = to_json(ex);
  report["exponents"]["grant_lhs_at_first_root"] = singularity::grant_lhs(2.0 / 3.0);
  log << "beta_root " << format_number(ex.beta_root) << "\n";
  for (double r : ex.grant_roots) log << "grant root " << format_number(r) << "\n";

  Json lemmas = Json::array();
  for (double nu : {1.0 / 3.0, 0.5, 2.0 / 3.0})
    for (bool sgn : {false, true}) {
      auto r = singularity::lemma_remainder_report(nu, sgn, 1.0, {2048, 8192, 32768});
      log << "lemma nu=" << six(nu) << (sgn ? " signed  " : " unsigned") << " sup " << six(r.remainder_sup.back())
          << " ratio " << six(r.convergence_ratio) << "\n";
      lemmas.push_back(to_json(r));
    }
  report["lemmas"] = lemmas;

  Json action = Json::array();
  for (double p : {1.0 / 3.0, 0.5, 2.0 / 3.0, 4.0 / 3.0, 5.0 / 3.0}) {
    const double pred = singularity::predicted_action_coefficient(p);
    const double meas = singularity::measured_action_coefficient(p, n);
    const double err = std::abs(meas - pred) / std::abs(pred);
    action.push_back(Json{{"p", p}, {"N", n}, {"predicted", pred}, {"measured", meas}, {"relative_error", err}});
    log << "action p=" << six(p) << " predicted " << six(pred) << " measured " << six(meas) << "\n";
  }
  report["action"] = action;

  const auto lc = singularity::log_case_check(n);
  report["log_case"] = to_json(lc);
  log << "log case " << six(lc.log_coefficient) << " vs 2/pi " << six(lc.expected) << "\n";

  const auto cc = singularity::cancellation_check(1.0, n);
  report["cancellation"] = to_json(cc);
  log << "cancellation " << six(cc.product_term) << " + " << six(cc.half_k_square) << " = " << six(cc.sum) << "\n";

  write_file_atomic(cfg.out, report.dump(2) + "\n");
  log << "verify -> " << cfg.out.string() << "\n";
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "solve") return Command::solve;
  if (name == "continue") return Command::extend;
  if (name == "analyze") return Command::analyze;
  if (name == "verify") return Command::verify;
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

babenko::SolverConfig RunConfig::solver() const {
  babenko::SolverConfig s;
  s.n = n.value_or(kDefaultN);
  s.newton_tol = tol;
  s.max_iters = max_iters;
  s.dealias = dealias;
  s.tail_abort = tail_abort;
  s.validate();
  return s;
}

void RunConfig::validate() const {
  if (n && (*n < 4 || *n % 2 != 0)) throw ConfigError("--n must be even and >= 4");
  solver();
  switch (command) {
    case Command::solve:
      if (out.empty() && branch.empty()) throw ConfigError("solve needs --out or --branch");
      if (!(height > 0.0)) throw ConfigError("--height must be positive");
      break;
    case Command::extend:
      require_path(branch, "--branch", "continue");
      if (!to_height) throw ConfigError("continue needs --to-height");
      if (!(height > 0.0)) throw ConfigError("--height must be positive");
      break;
    case Command::analyze:
      require_path(branch, "--branch", "analyze");
      require_path(out, "--out", "analyze");
      break;
    case Command::verify:
      require_path(out, "--out", "verify");
      break;
  }
}

void run(const RunConfig& config, std::ostream& log) {
  config.validate();
  switch (config.command) {
    case Command::solve:
      return run_solve(config, log);
    case Command::extend:
      return run_extend(config, log);
    case Command::analyze:
      return run_analyze(config, log);
    case Command::verify:
      return run_verify(config, log);
  }
}

}  // namespace stokeslab::io
