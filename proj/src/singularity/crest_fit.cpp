#include "stokeslab/singularity/crest_fit.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/LevenbergMarquardt>

#include <cmath>
#include <string>

#include "stokeslab/error.hpp"

namespace stokeslab::singularity {

namespace {

constexpr double kMuLo = 2.0 / 3.0;
constexpr double kMuHi = 2.0;

double mu_of(double t) { return kMuLo + (kMuHi - kMuLo) / (1.0 + std::exp(-t)); }
double t_of(double mu) { return -std::log((kMuHi - kMuLo) / (mu - kMuLo) - 1.0); }

// Relative residuals 1 − (A u^β + B u^μ)/d over (A, β, B, t), μ = mu_of(t).
struct JointModel : Eigen::DenseFunctor<double> {
  const std::vector<double>& u;
  const std::vector<double>& d;

  JointModel(const std::vector<double>& u_, const std::vector<double>& d_)
      : DenseFunctor(4, static_cast<int>(u_.size())), u(u_), d(d_) {}

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const double mu = mu_of(x(3));
    for (std::size_t i = 0; i < u.size(); ++i)
      f(static_cast<Eigen::Index>(i)) = 1.0 - (x(0) * std::pow(u[i], x(1)) + x(2) * std::pow(u[i], mu)) / d[i];
    return 0;
  }

  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& J) const {
    const double mu = mu_of(x(3));
    const double s = 1.0 / (1.0 + std::exp(-x(3)));
    const double dmu = (kMuHi - kMuLo) * s * (1.0 - s);
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      const double lu = std::log(u[i]);
      const double pb = std::pow(u[i], x(1)), pm = std::pow(u[i], mu);
      J(r, 0) = -pb / d[i];
      J(r, 1) = -x(0) * pb * lu / d[i];
      J(r, 2) = -pm / d[i];
      J(r, 3) = -x(2) * pm * lu * dmu / d[i];
    }
    return 0;
  }
};

double model_value(const SingularityFit& fit, double u) {
  double m = fit.A * std::pow(u, fit.beta);
  if (fit.B && fit.mu) m += *fit.B * std::pow(u, *fit.mu);
  return m;
}

double log_rms(const SingularityFit& fit, const std::vector<double>& u, const std::vector<double>& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = std::log(d[i] / model_value(fit, u[i]));
    s += r * r;
  }
  return std::sqrt(s / static_cast<double>(u.size()));
}

void joint_fit(SingularityFit& fit, const std::vector<double>& u, const std::vector<double>& d) {
  JointModel model(u, d);
  Eigen::VectorXd x(4);
  x << fit.A, fit.beta, 0.0, t_of(kSubleadingSeed);
  Eigen::LevenbergMarquardt<JointModel> lm(model);
  lm.setMaxfev(2000);
  const auto status = lm.minimize(x);
  using namespace Eigen::LevenbergMarquardtSpace;
  const bool ok_status = status == RelativeReductionTooSmall || status == RelativeErrorTooSmall ||
                         status == RelativeErrorAndReductionTooSmall || status == CosinusTooSmall;
  const double mu = mu_of(x(3));
  const bool sane = x.allFinite() && x(0) > 0.0 && x(1) > 0.0 && mu > x(1) && std::abs(x(3)) < 30.0;
  if (!ok_status || !sane) {
    fit.subleading_failed = true;
    return;
  }
  fit.A = x(0);
  fit.beta = x(1);
  fit.B = x(2);
  fit.mu = mu;
}

}  // namespace

FitWindow default_crest_window(const spectral::Grid& grid) { return FitWindow{10.0 * grid.spacing(), 0.1}; }

SingularityFit crest_fit_about(const spectral::PeriodicProfile& profile, double level,
                               std::optional<FitWindow> window, bool subleading) {
  const auto& grid = profile.grid();
  const FitWindow w = window.value_or(default_crest_window(grid));
  const auto idx = checked_window(grid, w, 10.0 * grid.spacing(), 0.5, 4);

  std::vector<double> u, d, lu, ld;
  for (int j : idx) {
    const double dev = level - profile[j];
    if (!(dev > 0.0))
      throw InvalidArgument("crest deviation is not positive at u = " + std::to_string(grid.point(j)));
    u.push_back(grid.point(j));
    d.push_back(dev);
    lu.push_back(std::log(grid.point(j)));
    ld.push_back(std::log(dev));
  }
  const BasisFunction basis[] = {[](double) { return 1.0; }, [](double x) { return x; }};
  const auto lin = least_squares(lu, ld, basis);

  SingularityFit fit;
  fit.A = std::exp(lin.coefficients[0]);
  fit.beta = lin.coefficients[1];
  fit.window = w;
  fit.points = static_cast<int>(idx.size());
  fit.subleading_requested = subleading;
  if (subleading) joint_fit(fit, u, d);
  fit.rms_residual = log_rms(fit, u, d);
  return fit;
}

SingularityFit crest_fit(const spectral::PeriodicProfile& profile, double c, std::optional<FitWindow> window,
                         bool subleading) {
  return crest_fit_about(profile, 0.5 * c * c, window, subleading);
}

std::vector<FitSample> fit_samples(const spectral::PeriodicProfile& profile, double level,
                                   const SingularityFit& fit) {
  std::vector<FitSample> out;
  for (int j : window_indices(profile.grid(), fit.window)) {
    const double u = profile.grid().point(j);
    const double dev = level - profile[j];
    const double model = model_value(fit, u);
    out.push_back({u, dev, model, std::log(dev / model)});
  }
  return out;
}

}  // namespace stokeslab::singularity
