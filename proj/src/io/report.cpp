#include "stokeslab/io/report.hpp"

namespace stokeslab::io {

Json to_json(const singularity::ExponentReport& r) {
  return Json{{"beta_root", r.beta_root},
              {"beta_roots_below_half", r.beta_roots_low},
              {"grant_first_root", r.grant_first_root},
              {"grant_roots", r.grant_roots}};
}

Json to_json(const singularity::LemmaReport& r) {
  return Json{{"nu", r.nu},
              {"signed", r.is_signed},
              {"u0", r.u0},
              {"coefficient", r.coefficient},
              {"resolutions", r.resolutions},
              {"inner_edge", r.inner_edge},
              {"remainder_sup", r.remainder_sup},
              {"difference_sup", r.difference_sup},
              {"convergence_ratio", r.convergence_ratio}};
}

Json to_json(const singularity::LogCaseReport& r) {
  return Json{{"N", r.n},
              {"window", {r.window.lo, r.window.hi}},
              {"log_coefficient", r.log_coefficient},
              {"expected", r.expected},
              {"relative_error", r.relative_error},
              {"smooth_log_coefficient", r.smooth_log_coefficient}};
}

Json to_json(const singularity::CancellationReport& r) {
  return Json{{"A", r.A},
              {"N", r.n},
              {"window", {r.window.lo, r.window.hi}},
              {"expected", r.expected},
              {"product_term", r.product_term},
              {"half_k_square", r.half_k_square},
              {"sum", r.sum},
              {"fixed_point_term", r.fixed_point_term}};
}

Json to_json(const singularity::SingularityFit& f) {
  Json j{{"A", f.A}, {"beta", f.beta}};
  j["B"] = f.B ? Json(*f.B) : Json(nullptr);
  j["mu"] = f.mu ? Json(*f.mu) : Json(nullptr);
  j["window"] = {f.window.lo, f.window.hi};
  j["rms_residual"] = f.rms_residual;
  j["points"] = f.points;
  if (f.subleading_requested) j["subleading_failed"] = f.subleading_failed;
  return j;
}

Json to_json(const babenko::Diagnostics& d) {
  return Json{{"residual_norm", d.residual_norm},
              {"mean_zero_value", d.mean_zero_value},
              {"crest_gap", d.crest_gap},
              {"tail_fraction", d.tail_fraction}};
}

}  // namespace stokeslab::io
