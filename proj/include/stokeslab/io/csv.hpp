#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "stokeslab/spectral/profile.hpp"

namespace stokeslab::io {

/// 17 significant digits, "nan"/"inf" for non-finite values.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string format_csv(const CsvTable& table);
void write_csv(const CsvTable& table, const std::filesystem::path& path);
CsvTable parse_csv(const std::string& content);
CsvTable read_csv(const std::filesystem::path& path);

/// Header "u,value", one row per grid node.
void write_profile_csv(const spectral::PeriodicProfile& profile, const std::filesystem::path& path);

/// Rebuilds the grid from the row count and checks the u column against it.
spectral::PeriodicProfile read_profile_csv(const std::filesystem::path& path);

}  // namespace stokeslab::io
