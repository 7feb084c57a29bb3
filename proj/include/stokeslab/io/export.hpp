#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "stokeslab/babenko/continuation.hpp"
#include "stokeslab/babenko/surface.hpp"
#include "stokeslab/singularity/crest_fit.hpp"

namespace stokeslab::io {

/// "<stem>_0007.csv" style name for entry 7.
std::string indexed_name(std::string_view stem, std::size_t index);

/// Header "x,y".
void write_surface_csv(const babenko::PhysicalSurface& surface, const std::filesystem::path& path);

/// Header "u,deviation,model,residual".
void write_fit_csv(const spectral::PeriodicProfile& profile, double level, const singularity::SingularityFit& fit,
                   const std::filesystem::path& path);

/// Writes profile_NNNN.csv for every entry and, in deep water,
/// surface_NNNN.csv; creates `dir` if needed. Returns the paths written.
std::vector<std::filesystem::path> export_plot_data(const babenko::WaveBranch& branch,
                                                    const std::filesystem::path& dir);

}  // namespace stokeslab::io
