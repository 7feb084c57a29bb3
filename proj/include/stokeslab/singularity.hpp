#pragma once

#include "stokeslab/singularity/action.hpp"
#include "stokeslab/singularity/crest_fit.hpp"
#include "stokeslab/singularity/exponents.hpp"
#include "stokeslab/singularity/fitting.hpp"
#include "stokeslab/singularity/lemma.hpp"
