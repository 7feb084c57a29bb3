#pragma once

#include <json.hpp>

#include "stokeslab/babenko/wave.hpp"
#include "stokeslab/singularity/action.hpp"
#include "stokeslab/singularity/crest_fit.hpp"
#include "stokeslab/singularity/exponents.hpp"
#include "stokeslab/singularity/lemma.hpp"

namespace stokeslab::io {

using Json = nlohmann::ordered_json;

Json to_json(const singularity::ExponentReport& r);
Json to_json(const singularity::LemmaReport& r);
Json to_json(const singularity::LogCaseReport& r);
Json to_json(const singularity::CancellationReport& r);
Json to_json(const singularity::SingularityFit& f);
Json to_json(const babenko::Diagnostics& d);

}  // namespace stokeslab::io
