#include "stokeslab/io/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "stokeslab/error.hpp"
#include "stokeslab/io/files.hpp"

namespace stokeslab::io {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  write_file_atomic(path, format_csv(table));
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable parse_csv(const std::string& content) {
  CsvTable t;
  std::stringstream ss(content);
  std::string line;
  int no = 0;
  while (std::getline(ss, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
      continue;
    }
    if (cells.size() != t.header.size()) throw ParseError("expected " + std::to_string(t.header.size()) + " columns", no);
    std::vector<double> row;
    for (const auto& c : cells) {
      char* end = nullptr;
      double v = std::strtod(c.c_str(), &end);
      if (c.empty() || *end != '\0') throw ParseError("not a number: '" + c + "'", no);
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

void write_profile_csv(const spectral::PeriodicProfile& profile, const std::filesystem::path& path) {
  CsvTable t{{"u", "value"}, {}};
  for (int j = 0; j < profile.size(); ++j) t.rows.push_back({profile.grid().point(j), profile[j]});
  write_csv(t, path);
}

spectral::PeriodicProfile read_profile_csv(const std::filesystem::path& path) {
  auto t = read_csv(path);
  if (t.header != std::vector<std::string>{"u", "value"}) throw ParseError("profile CSV header must be 'u,value'", 1);
  spectral::Grid grid(static_cast<int>(t.rows.size()));
  std::vector<double> values;
  for (int j = 0; j < grid.size(); ++j) {
    const auto& row = t.rows[static_cast<std::size_t>(j)];
    if (std::abs(row[0] - grid.point(j)) > 1e-12) throw ParseError("u column is not the staggered grid", j + 2);
    values.push_back(row[1]);
  }
  return spectral::PeriodicProfile(grid, std::move(values));
}

}  // namespace stokeslab::io
