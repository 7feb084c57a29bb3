#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "stokeslab/stokeslab.hpp"

namespace py = pybind11;
using namespace stokeslab;
using spectral::DepthMode;
using spectral::Grid;
using spectral::PeriodicProfile;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

PeriodicProfile to_profile(const Array& a) {
  if (a.ndim() != 1) throw InvalidArgument("expected a 1-d array");
  const auto n = static_cast<int>(a.shape(0));
  return PeriodicProfile(Grid(n), std::vector<double>(a.data(), a.data() + n));
}

Array to_array(std::span<const double> v) {
  Array out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}
Array to_array(const PeriodicProfile& p) { return to_array(p.values()); }

babenko::WaveState state(const Array& eta, double c, const std::string& mode) {
  return {to_profile(eta), c, DepthMode::parse(mode)};
}

py::object to_python(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict entry_dict(const babenko::BranchEntry& e) {
  py::dict d;
  d["s"] = e.height;
  d["c"] = e.state.speed;
  d["eta"] = to_array(e.state.profile);
  d["cos_coeffs"] = to_array(e.cos_coeffs);
  d["diagnostics"] = to_python(io::to_json(e.diagnostics));
  return d;
}

py::dict branch_dict(const babenko::WaveBranch& b) {
  py::list entries;
  for (const auto& e : b.entries) entries.append(entry_dict(e));
  py::dict d;
  d["entries"] = entries;
  d["stop"] = babenko::to_string(b.stop);
  d["truncated"] = b.truncated;
  return d;
}

babenko::SolverConfig solver_config(int n, double tol, int max_iters, bool dealias, double tail_abort) {
  babenko::SolverConfig c;
  c.n = n;
  c.newton_tol = tol;
  c.max_iters = max_iters;
  c.dealias = dealias;
  c.tail_abort = tail_abort;
  return c;
}

std::optional<singularity::FitWindow> to_window(const std::optional<std::pair<double, double>>& w) {
  if (!w) return std::nullopt;
  return singularity::FitWindow{w->first, w->second};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stokes waves in holomorphic coordinates and crest-singularity checks";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SingularJacobian>(m, "SingularJacobian", base.ptr());
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base.ptr());
  py::register_exception<PoleProximity>(m, "PoleProximity", PyExc_ValueError);
  py::register_exception<LogCase>(m, "LogCase", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("grid_points", [](int n) { return to_array(Grid(n).points()); }, py::arg("n"));
  m.def("forward_coefficients", [](const Array& f) { return spectral::forward_coefficients(to_profile(f).values()); },
        py::arg("values"));
  m.def(
      "hilbert",
      [](const Array& f) {
        auto p = to_profile(f);
        return to_array(spectral::apply_multiplier(p, spectral::hilbert_multiplier(p.size())));
      },
      py::arg("values"));
  m.def(
      "apply_k",
      [](const Array& f, const std::string& mode) {
        auto p = to_profile(f);
        return to_array(spectral::apply_multiplier(p, spectral::k_multiplier(DepthMode::parse(mode), p.size())));
      },
      py::arg("values"), py::arg("mode") = "deep");
  m.def(
      "hilbert_pv_quadrature",
      [](const Array& f, double u, int terms) { return spectral::hilbert_pv_quadrature(to_profile(f), u, terms); },
      py::arg("values"), py::arg("u"), py::arg("terms") = 0);
  m.def(
      "sample_power", [](double p, int n, bool is_signed) { return to_array(spectral::sample_power(p, Grid(n), is_signed)); },
      py::arg("p"), py::arg("n"), py::arg("signed") = false);

  m.def(
      "residual",
      [](const Array& eta, double c, const std::string& mode, bool dealias) {
        return to_array(babenko::residual(state(eta, c, mode), dealias));
      },
      py::arg("eta"), py::arg("c"), py::arg("mode") = "deep", py::arg("dealias") = true);
  m.def(
      "deviation", [](const Array& eta, double c) { return to_array(babenko::deviation(state(eta, c, "deep"))); },
      py::arg("eta"), py::arg("c"));
  m.def(
      "fixed_point_map",
      [](const Array& dev, double c, bool dealias) {
        return to_array(babenko::fixed_point_map(to_profile(dev), c, dealias));
      },
      py::arg("dev"), py::arg("c"), py::arg("dealias") = true);
  m.def(
      "jacobian_apply",
      [](const Array& eta, double c, const Array& dir, const std::string& mode, bool dealias) {
        return to_array(babenko::jacobian_apply(state(eta, c, mode), to_profile(dir), dealias));
      },
      py::arg("eta"), py::arg("c"), py::arg("direction"), py::arg("mode") = "deep", py::arg("dealias") = true);
  m.def(
      "diagnose",
      [](const Array& eta, double c, const std::string& mode) {
        return to_python(io::to_json(babenko::diagnose(state(eta, c, mode))));
      },
      py::arg("eta"), py::arg("c"), py::arg("mode") = "deep");
  m.def("wave_height", [](const Array& eta) { return babenko::wave_height(to_profile(eta)); }, py::arg("eta"));

  m.def(
      "small_amplitude_seed",
      [](int n, double s, const std::string& mode) {
        auto st = babenko::small_amplitude_seed(n, s, DepthMode::parse(mode));
        return py::make_tuple(to_array(st.profile), st.speed);
      },
      py::arg("n"), py::arg("s"), py::arg("mode") = "deep");
  m.def(
      "newton_solve",
      [](const Array& eta, double c, std::optional<double> height, const std::string& mode, double tol, int max_iters,
         bool dealias) {
        babenko::Constraint con = babenko::FixedSpeed{};
        if (height) con = babenko::FixedHeight{*height};
        const auto init = state(eta, c, mode);
        auto r = babenko::newton_solve_detailed(
            init, con, solver_config(init.profile.size(), tol, max_iters, dealias, 0.01));
        py::dict d;
        d["eta"] = to_array(r.state.profile);
        d["c"] = r.state.speed;
        d["iterations"] = r.iterations;
        d["residual_norm"] = r.residual_norm;
        return d;
      },
      py::arg("eta"), py::arg("c"), py::arg("height") = std::nullopt, py::arg("mode") = "deep",
      py::arg("tol") = 1e-12, py::arg("max_iters") = 25, py::arg("dealias") = true);
  m.def(
      "continue_branch",
      [](int n, double seed_height, double target, const std::string& mode, double tol, double tail_abort,
         double initial_step, double max_step, double min_step, double growth) {
        const auto cfg = solver_config(n, tol, 25, true, tail_abort);
        const babenko::StepControl step{initial_step, max_step, min_step, growth};
        const auto seed = babenko::small_amplitude_seed(n, seed_height, DepthMode::parse(mode));
        babenko::WaveBranch b;
        {
          py::gil_scoped_release release;
          b = babenko::continue_branch(seed, target, cfg, step);
        }
        return branch_dict(b);
      },
      py::arg("n"), py::arg("seed_height"), py::arg("target"), py::arg("mode") = "deep", py::arg("tol") = 1e-12,
      py::arg("tail_abort") = 0.01, py::arg("initial_step") = 0.05, py::arg("max_step") = 0.05,
      py::arg("min_step") = 1e-3, py::arg("growth") = 1.5);
  m.def(
      "physical_surface",
      [](const Array& eta, double c, int nodes) {
        auto s = babenko::physical_surface(state(eta, c, "deep"), nodes);
        return py::make_tuple(to_array(s.x), to_array(s.y), s.crest_angle_deg);
      },
      py::arg("eta"), py::arg("c"), py::arg("nodes") = babenko::kCrestAngleNodes);

  m.def("load_branch", [](const std::filesystem::path& p) { return branch_dict(io::load_branch(p)); },
        py::arg("path"));

  m.def("grant_lhs", &singularity::grant_lhs, py::arg("mu"));
  m.def("find_exponents", [] { return to_python(io::to_json(singularity::find_exponents())); });
  m.def("predicted_action_coefficient", &singularity::predicted_action_coefficient, py::arg("p"));
  m.def(
      "measured_action_coefficient",
      [](double p, int n, std::optional<std::pair<double, double>> w) {
        return singularity::measured_action_coefficient(p, n, to_window(w).value_or(singularity::kActionWindow));
      },
      py::arg("p"), py::arg("n"), py::arg("window") = std::nullopt);
  m.def(
      "log_case_check",
      [](int n, std::optional<std::pair<double, double>> w) {
        auto win = to_window(w);
        return to_python(io::to_json(win ? singularity::log_case_check(n, *win) : singularity::log_case_check(n)));
      },
      py::arg("n"), py::arg("window") = std::nullopt);
  m.def(
      "lemma_remainder_report",
      [](double nu, bool is_signed, double u0, const std::vector<int>& res) {
        return to_python(io::to_json(singularity::lemma_remainder_report(nu, is_signed, u0, res)));
      },
      py::arg("nu"), py::arg("signed"), py::arg("u0") = 1.0,
      py::arg("resolutions") = std::vector<int>{2048, 8192, 32768});
  m.def(
      "cancellation_check",
      [](double A, int n) { return to_python(io::to_json(singularity::cancellation_check(A, n))); },
      py::arg("A") = 1.0, py::arg("n") = 16384);
  m.def(
      "crest_fit",
      [](const Array& eta, double c, std::optional<std::pair<double, double>> w, bool subleading) {
        return to_python(io::to_json(singularity::crest_fit(to_profile(eta), c, to_window(w), subleading)));
      },
      py::arg("eta"), py::arg("c"), py::arg("window") = std::nullopt, py::arg("subleading") = false);
}
