#include "stokeslab/io/branch_io.hpp"

#include <json.hpp>

#include <string>

#include "stokeslab/babenko/operators.hpp"
#include "stokeslab/error.hpp"
#include "stokeslab/io/files.hpp"

namespace stokeslab::io {

using Json = nlohmann::ordered_json;

std::string branch_record(const babenko::BranchEntry& e) {
  Json j;
  j["s"] = e.height;
  j["c"] = e.state.speed;
  j["N"] = e.state.profile.size();
  j["mode"] = e.state.mode.label();
  j["cos_coeffs"] = e.cos_coeffs;
  j["residual_norm"] = e.diagnostics.residual_norm;
  j["mean_zero_value"] = e.diagnostics.mean_zero_value;
  j["crest_gap"] = e.diagnostics.crest_gap;
  return j.dump();
}

namespace {

template <class T>
T field(const Json& j, const char* key, int line) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'", line);
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type", line);
  }
}

double number(const Json& j, const char* key, int line) {
  auto it = j.find(key);
  if (it != j.end() && !it->is_number()) throw ParseError(std::string("field '") + key + "' is not a number", line);
  return field<double>(j, key, line);
}

}  // namespace

babenko::BranchEntry parse_branch_record(std::string_view text, int line) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line);
  }
  if (!j.is_object()) throw ParseError("record is not a JSON object", line);

  const double s = number(j, "s", line);
  const double c = number(j, "c", line);
  const int n = field<int>(j, "N", line);
  const auto mode_text = field<std::string>(j, "mode", line);
  auto coeffs_it = j.find("cos_coeffs");
  if (coeffs_it == j.end()) throw ParseError("missing field 'cos_coeffs'", line);
  if (!coeffs_it->is_array()) throw ParseError("field 'cos_coeffs' is not an array", line);
  for (const auto& v : *coeffs_it)
    if (!v.is_number()) throw ParseError("field 'cos_coeffs' holds a non-number", line);
  auto coeffs = coeffs_it->get<std::vector<double>>();

  babenko::Diagnostics d;
  d.residual_norm = number(j, "residual_norm", line);
  d.mean_zero_value = number(j, "mean_zero_value", line);
  d.crest_gap = number(j, "crest_gap", line);

  if (n < 4 || n % 2 != 0) throw ParseError("N must be even and >= 4", line);
  if (static_cast<int>(coeffs.size()) != n / 2)
    throw ParseError("cos_coeffs has " + std::to_string(coeffs.size()) + " entries, expected N/2 = " +
                         std::to_string(n / 2),
                     line);
  spectral::DepthMode mode = spectral::DepthMode::infinite();
  try {
    mode = spectral::DepthMode::parse(mode_text);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line);
  }

  auto state = babenko::WaveState::from_cosine_coefficients(spectral::Grid(n), coeffs, c, mode);
  d.tail_fraction = babenko::tail_fraction(state.profile);
  return babenko::BranchEntry{s, std::move(state), std::move(coeffs), d};
}

babenko::WaveBranch parse_branch(std::string_view content) {
  babenko::WaveBranch branch;
  int line = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    auto text = content.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto e = parse_branch_record(text, line);
    if (!branch.empty()) {
      const auto& last = branch.entries.back();
      if (e.state.profile.size() != last.state.profile.size())
        throw ParseError("N differs from earlier records", line);
      if (!(e.state.mode == last.state.mode)) throw ParseError("mode differs from earlier records", line);
    }
    branch.entries.push_back(std::move(e));
  }
  return branch;
}

babenko::WaveBranch load_branch(const std::filesystem::path& path) { return parse_branch(read_file(path)); }

std::string format_branch(const babenko::WaveBranch& branch) {
  std::string out;
  for (const auto& e : branch.entries) {
    out += branch_record(e);
    out += '\n';
  }
  return out;
}

void store_branch(const babenko::WaveBranch& branch, const std::filesystem::path& path) {
  write_file_atomic(path, format_branch(branch));
}

}  // namespace stokeslab::io
