// One line per acceptance criterion: PASS/FAIL, id, elapsed time, measured values.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stokeslab/stokeslab.hpp"

using namespace stokeslab;
using spectral::DepthMode;
using spectral::Grid;
using spectral::PeriodicProfile;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Outcome&)> body;
};

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + g6(v[i]);
  return out;
}

// Smooth even profile with decaying random cosine modes.
PeriodicProfile random_state(int n, std::mt19937& rng, double amp) {
  std::normal_distribution<double> g;
  std::vector<double> a(static_cast<std::size_t>(n / 2), 0.0);
  for (int k = 1; k < 12; ++k) a[static_cast<std::size_t>(k)] = amp * g(rng) * std::exp(-0.4 * k);
  return PeriodicProfile::from_cosine_coefficients(Grid(n), a);
}

PeriodicProfile random_direction(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  std::vector<double> a(static_cast<std::size_t>(n / 2), 0.0);
  for (int k = 0; k < 12; ++k) a[static_cast<std::size_t>(k)] = g(rng) * std::exp(-0.3 * k);
  return PeriodicProfile::from_cosine_coefficients(Grid(n), a);
}

void exponents(Outcome& o) {
  const auto r = singularity::find_exponents();
  const double g = std::abs(singularity::grant_lhs(2.0 / 3.0));
  o.detail << "beta_root=" << io::format_number(r.beta_root) << " grant_lhs(2/3)=" << g6(g);
  o.require(std::abs(r.beta_root - 2.0 / 3.0) <= 1e-12, "beta_root");
  o.require(r.beta_roots_low.empty(), "no root below 1/2");
  o.require(g <= 1e-12, "grant_lhs(2/3)");
  o.require(r.grant_roots.size() == 1, "single Grant root in (2/3, 2)");
  if (!r.grant_roots.empty()) {
    o.detail << " grant_root=" << io::format_number(r.grant_roots[0]);
    o.require(std::round(r.grant_roots[0] * 1000.0) == 1469.0, "Grant root 1.469 at 3 decimals");
  }
}

void lemmas(Outcome& o) {
  const std::vector<int> res{2048, 8192, 32768};
  for (double nu : {1.0 / 3.0, 0.5, 2.0 / 3.0})
    for (bool sgn : {false, true}) {
      const auto r = singularity::lemma_remainder_report(nu, sgn, 1.0, res);
      const double r1 = r.remainder_sup[1] / r.remainder_sup[0];
      const double r2 = r.remainder_sup[2] / r.remainder_sup[1];
      o.detail << (o.detail.tellp() > 0 ? " " : "") << (sgn ? "s" : "u") << g6(nu) << ":" << g6(r.remainder_sup.back()) << "(" << g6(r1) << ","
               << g6(r2) << ")";
      const bool stable = r1 >= 0.8 && r1 <= 1.2 && r2 >= 0.8 && r2 <= 1.2;
      o.require(stable, "remainder ratio for nu=" + g6(nu) + (sgn ? " signed" : " unsigned"));
    }
}

void action(Outcome& o) {
  for (double p : {1.0 / 3.0, 0.5, 2.0 / 3.0, 4.0 / 3.0, 5.0 / 3.0}) {
    const double want = singularity::predicted_action_coefficient(p);
    const double got = singularity::measured_action_coefficient(p, 16384);
    const double rel = std::abs(got - want) / std::abs(want);
    o.detail << (o.detail.tellp() > 0 ? " " : "") << "p=" << g6(p) << ":" << g6(got) << "/" << g6(want);
    o.require(rel <= 0.01, "action coefficient p=" + g6(p));
  }
  const auto lc = singularity::log_case_check(16384);
  o.detail << " log=" << g6(lc.log_coefficient) << " rel=" << g6(lc.relative_error);
  o.require(lc.relative_error <= 0.02, "log case");
}

void cancellation(Outcome& o) {
  const auto c = singularity::cancellation_check(1.0, 16384);
  const double e = c.expected;
  o.detail << "fKf=" << g6(c.product_term) << " halfKf2=" << g6(c.half_k_square) << " sum=" << g6(c.sum)
           << " expected=" << g6(e);
  o.require(std::abs(c.product_term + e) <= 0.02 * e, "f K f coefficient");
  o.require(std::abs(c.half_k_square - e) <= 0.02 * e, "half K f^2 coefficient");
  o.require(std::abs(c.sum) <= 0.01 * e, "sum");
}

void solver(Outcome& o) {
  std::mt19937 rng(5);
  const int n = 128;
  const double h = 1e-6;
  double worst_fd = 0.0, worst_id = 0.0;
  for (int t = 0; t < 10; ++t) {
    babenko::WaveState s{random_state(n, rng, 0.15), 0.9 + 0.02 * t, DepthMode::infinite()};
    const auto d = random_direction(n, rng);
    const auto jd = babenko::jacobian_apply(s, d);
    const auto fd = (babenko::residual({s.profile + h * d, s.speed, s.mode}) -
                     babenko::residual({s.profile - h * d, s.speed, s.mode})) *
                    (0.5 / h);
    worst_fd = std::max(worst_fd, max_difference(jd, fd) / jd.max_abs());

    const auto dev = babenko::deviation(s);
    const auto r = babenko::residual(s);
    const auto id = dev - babenko::fixed_point_map(dev, s.speed);
    worst_id = std::max(worst_id, max_difference(id, r) / std::max(1.0, r.max_abs()));
  }
  o.detail << "jacobian_fd=" << g6(worst_fd) << " identity=" << g6(worst_id);
  o.require(worst_fd <= 1e-6, "Jacobian vs finite differences");
  o.require(worst_id <= 1e-12, "fixed-point identity");

  babenko::SolverConfig cfg;
  cfg.n = 256;
  const auto b = babenko::continue_branch(babenko::small_amplitude_seed(256, 0.002, DepthMode::infinite()), 0.6, cfg);
  double worst_mz = 0.0;
  for (const auto& e : b.entries) worst_mz = std::max(worst_mz, std::abs(e.diagnostics.mean_zero_value));
  o.detail << " states=" << b.size() << " mean_zero=" << g6(worst_mz);
  o.require(b.stop == babenko::StopReason::target_reached, "branch to s=0.6");
  o.require(worst_mz <= 10.0 * cfg.newton_tol, "mean-zero condition");
}

void branch(Outcome& o) {
  babenko::SolverConfig cfg;
  cfg.n = 1024;
  cfg.newton_tol = 1e-11;
  const auto b = babenko::continue_branch(babenko::small_amplitude_seed(1024, 0.002, DepthMode::infinite()), 0.95, cfg);
  const std::size_t m = b.size();
  o.detail << "states=" << m << " stop=" << babenko::to_string(b.stop) << " s_max=" << g6(b.entries.back().height);
  o.require(m >= 6, "at least 6 states");
  if (m < 6) return;

  double worst = 0.0;
  bool gap_down = true;
  for (std::size_t i = 0; i < m; ++i) {
    worst = std::max(worst, b.entries[i].diagnostics.residual_norm);
    if (i && !(b.entries[i].diagnostics.crest_gap < b.entries[i - 1].diagnostics.crest_gap)) gap_down = false;
  }
  o.detail << " residual=" << g6(worst);
  o.require(worst <= 1e-10, "residuals");
  o.require(gap_down, "crest_gap decreasing");

  // c − 1 against the Stokes expansion s²/8 at the first state, and c increasing with s.
  const auto& first = b.entries.front();
  const double c_ratio = (first.state.speed - 1.0) / (first.height * first.height / 8.0);
  o.detail << " (c-1)/(s^2/8)=" << g6(c_ratio);
  o.require(std::abs(c_ratio - 1.0) <= 1e-3, "c -> 1 as s -> 0");
  o.require(b.entries[1].state.speed > first.state.speed, "c grows with s near the bifurcation");

  std::vector<double> beta, angle;
  for (std::size_t i = m - 5; i < m; ++i) {
    const auto& st = b.entries[i].state;
    beta.push_back(singularity::crest_fit_about(st.profile, babenko::crest_value(st.profile)).beta);
    angle.push_back(babenko::physical_surface(st).crest_angle_deg);
  }
  o.detail << " beta=" << join(beta) << " angle=" << join(angle);
  bool beta_down = true, angle_down = true;
  for (std::size_t i = 1; i < 5; ++i) {
    beta_down = beta_down && beta[i] < beta[i - 1];
    angle_down = angle_down && angle[i] < angle[i - 1];
  }
  const double target = 2.0 / 3.0;
  o.require(beta_down, "beta decreasing over the last 5 states");
  o.require(std::abs(beta.back() - target) < std::abs(beta.front() - target), "beta approaches 2/3");
  o.require(angle_down, "crest angle decreasing");
  o.require(std::abs(angle.back() - 120.0) <= 15.0, "crest angle within 15 degrees of 120");
}

void synthetic(Outcome& o) {
  const int n = 16384;
  const Grid grid(n);
  const auto pure = PeriodicProfile::from_function(grid, [](double u) {
    return 0.5 - 2.0 * std::pow(std::abs(u), 2.0 / 3.0);
  });
  const auto f1 = singularity::crest_fit(pure, 1.0);
  o.detail << "A=" << io::format_number(f1.A) << " beta=" << io::format_number(f1.beta);
  o.require(std::abs(f1.A - 2.0) <= 1e-6, "A");
  o.require(std::abs(f1.beta - 2.0 / 3.0) <= 1e-6, "beta");

  const auto two = PeriodicProfile::from_function(grid, [](double u) {
    const double a = std::abs(u);
    return 0.5 - std::pow(a, 2.0 / 3.0) - 0.5 * std::pow(a, 1.469);
  });
  const auto f2 = singularity::crest_fit(two, 1.0, std::nullopt, true);
  o.require(!f2.subleading_failed && f2.mu.has_value(), "two-term fit converged");
  if (f2.mu) {
    o.detail << " two-term beta=" << g6(f2.beta) << " mu=" << g6(*f2.mu);
    o.require(std::abs(f2.beta - 2.0 / 3.0) <= 1e-2, "two-term beta");
    o.require(std::abs(*f2.mu - 1.469) <= 1e-2, "two-term mu");
  }
}

void trivial(Outcome& o) {
  double worst = 0.0;
  for (auto mode : {DepthMode::infinite(), DepthMode::finite(1.0), DepthMode::toy()})
    for (double c : {0.0, 0.5, 1.0, 1.3, 3.0})
      worst = std::max(worst, babenko::residual({PeriodicProfile::constant(Grid(64), 0.0), c, mode}).max_abs());
  o.require(worst == 0.0, "zero profile is a root");

  const Grid g(64);
  const babenko::WaveState flat{PeriodicProfile::constant(g, 0.0), 1.0, DepthMode::infinite()};
  const auto cosu = PeriodicProfile::from_function(g, [](double u) { return std::cos(u); });
  const double kernel = babenko::jacobian_apply(flat, cosu).max_abs();
  o.detail << "|L cos u|=" << g6(kernel);
  o.require(kernel <= 1e-13, "linearization annihilates cos u");
  bool singular = false;
  try {
    babenko::SolverConfig cfg;
    cfg.n = 64;
    babenko::newton_solve(flat, babenko::FixedSpeed{}, cfg);
  } catch (const SingularJacobian&) {
    singular = true;
  }
  o.detail << " singular_jacobian=" << (singular ? "yes" : "no");
  o.require(singular, "newton reports singular Jacobian");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exponent equations", 1.0, exponents},
      {2, "Hilbert remainder stability", 30.0, lemmas},
      {3, "action coefficients", 30.0, action},
      {4, "cancellation of |u|^(1/3)", 10.0, cancellation},
      {5, "solver correctness", 30.0, solver},
      {6, "branch behavior", 600.0, branch},
      {7, "synthetic singularity recovery", 5.0, synthetic},
      {8, "trivial and bifurcation structure", 1.0, trivial},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit_s) {
      o.pass = false;
      o.detail << " [over time limit " << c.limit_s << " s]";
    }
    if (!o.pass) ++failed;
    std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, dt, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
