#pragma once

#include "stokeslab/spectral/fft.hpp"
#include "stokeslab/spectral/grid.hpp"
#include "stokeslab/spectral/hilbert_quadrature.hpp"
#include "stokeslab/spectral/multiplier.hpp"
#include "stokeslab/spectral/power.hpp"
#include "stokeslab/spectral/products.hpp"
#include "stokeslab/spectral/profile.hpp"
