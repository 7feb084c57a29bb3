#pragma once

#include "stokeslab/spectral/profile.hpp"

namespace stokeslab::spectral {

/// Zero-padding factor used for quadratic products.
inline constexpr int kDealiasFactor = 2;

/// Product of two profiles evaluated on a grid of 2N points and truncated
/// back to N. For band-limited inputs the retained modes are exact.
PeriodicProfile dealiased_product(const PeriodicProfile& a, const PeriodicProfile& b);

/// dealiased_product or pointwise_product depending on the flag.
PeriodicProfile product(const PeriodicProfile& a, const PeriodicProfile& b, bool dealias);

}  // namespace stokeslab::spectral
