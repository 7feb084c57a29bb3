#pragma once

#include "stokeslab/babenko.hpp"
#include "stokeslab/error.hpp"
#include "stokeslab/io.hpp"
#include "stokeslab/singularity.hpp"
#include "stokeslab/spectral.hpp"
