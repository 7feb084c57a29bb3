#include "stokeslab/singularity/fitting.hpp"

#include <Eigen/QR>

#include <cmath>
#include <string>

#include "stokeslab/error.hpp"

namespace stokeslab::singularity {

LinearFit least_squares(std::span<const double> x, std::span<const double> y, std::span<const BasisFunction> basis) {
  const auto rows = static_cast<Eigen::Index>(x.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  if (y.size() != x.size()) throw InvalidArgument("least_squares: x and y differ in length");
  if (rows < cols || cols == 0) throw InvalidArgument("least_squares: too few points for the basis");
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    b(i) = y[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < cols; ++k) A(i, k) = basis[static_cast<std::size_t>(k)](x[static_cast<std::size_t>(i)]);
  }
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index k = 0; k < cols; ++k)
    if (scale(k) == 0.0) scale(k) = 1.0;
  Eigen::MatrixXd As = A * scale.cwiseInverse().asDiagonal();
  Eigen::VectorXd z = As.colPivHouseholderQr().solve(b);
  Eigen::VectorXd coef = z.cwiseQuotient(scale);

  LinearFit fit;
  fit.coefficients.assign(coef.data(), coef.data() + cols);
  Eigen::VectorXd r = b - A * coef;
  fit.residuals.assign(r.data(), r.data() + rows);
  fit.rms_residual = std::sqrt(r.squaredNorm() / static_cast<double>(rows));
  return fit;
}

std::vector<int> window_indices(const spectral::Grid& grid, FitWindow window) {
  std::vector<int> idx;
  for (int j = grid.first_positive(); j < grid.size(); ++j) {
    const double u = grid.point(j);
    if (u >= window.lo && u <= window.hi) idx.push_back(j);
  }
  return idx;
}

std::vector<int> checked_window(const spectral::Grid& grid, FitWindow window, double min_lo, double max_hi,
                                int min_points) {
  const double slack = 1e-12;
  if (!(window.lo < window.hi)) throw InvalidArgument("fit window needs lo < hi");
  if (window.lo < min_lo * (1.0 - slack) || window.hi > max_hi * (1.0 + slack))
    throw InvalidArgument("fit window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                          "] must lie inside [" + std::to_string(min_lo) + ", " + std::to_string(max_hi) + "]");
  auto idx = window_indices(grid, window);
  if (static_cast<int>(idx.size()) < min_points)
    throw InvalidArgument("fit window holds " + std::to_string(idx.size()) + " grid points, need " +
                          std::to_string(min_points));
  return idx;
}

}  // namespace stokeslab::singularity
