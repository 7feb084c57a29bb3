#include "stokeslab/spectral/products.hpp"

namespace stokeslab::spectral {

PeriodicProfile dealiased_product(const PeriodicProfile& a, const PeriodicProfile& b) {
  if (!(a.grid() == b.grid())) return pointwise_product(a, b);  // throws the size mismatch
  const int n = a.size();
  const int big = kDealiasFactor * n;
  auto fa = evaluate_on_grid(a.coefficients(), big);
  auto fb = evaluate_on_grid(b.coefficients(), big);
  for (std::size_t j = 0; j < fa.size(); ++j) fa[j] *= fb[j];
  Spectrum c = forward_coefficients(fa);
  c.resize(static_cast<std::size_t>(n / 2 + 1));
  return PeriodicProfile::from_coefficients(a.grid(), c);
}

PeriodicProfile product(const PeriodicProfile& a, const PeriodicProfile& b, bool dealias) {
  return dealias ? dealiased_product(a, b) : pointwise_product(a, b);
}

}  // namespace stokeslab::spectral
