#pragma once

#include "stokeslab/babenko/continuation.hpp"
#include "stokeslab/babenko/newton.hpp"
#include "stokeslab/babenko/operators.hpp"
#include "stokeslab/babenko/surface.hpp"
#include "stokeslab/babenko/wave.hpp"
