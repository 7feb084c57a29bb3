#include "stokeslab/io/export.hpp"

#include <cstdio>
#include <system_error>

#include "stokeslab/error.hpp"
#include "stokeslab/io/csv.hpp"

namespace stokeslab::io {

std::string indexed_name(std::string_view stem, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%04zu.csv", index);
  return std::string(stem) + buf;
}

void write_surface_csv(const babenko::PhysicalSurface& surface, const std::filesystem::path& path) {
  CsvTable t{{"x", "y"}, {}};
  for (std::size_t j = 0; j < surface.x.size(); ++j) t.rows.push_back({surface.x[j], surface.y[j]});
  write_csv(t, path);
}

void write_fit_csv(const spectral::PeriodicProfile& profile, double level, const singularity::SingularityFit& fit,
                   const std::filesystem::path& path) {
  CsvTable t{{"u", "deviation", "model", "residual"}, {}};
  for (const auto& s : singularity::fit_samples(profile, level, fit))
    t.rows.push_back({s.u, s.deviation, s.model, s.residual});
  write_csv(t, path);
}

std::vector<std::filesystem::path> export_plot_data(const babenko::WaveBranch& branch,
                                                    const std::filesystem::path& dir) {
  if (branch.empty()) throw InvalidArgument("nothing to export: branch is empty");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string());
  std::vector<std::filesystem::path> written;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    const auto& state = branch.entries[i].state;
    auto p = dir / indexed_name("profile", i);
    write_profile_csv(state.profile, p);
    written.push_back(p);
    if (state.mode.is_deep()) {
      auto q = dir / indexed_name("surface", i);
      write_surface_csv(babenko::physical_surface(state), q);
      written.push_back(q);
    }
  }
  return written;
}

}  // namespace stokeslab::io
