#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "stokeslab/babenko/continuation.hpp"

namespace stokeslab::io {

/// One JSON-lines record:
/// {"s","c","N","mode","cos_coeffs","residual_norm","mean_zero_value","crest_gap"}.
std::string branch_record(const babenko::BranchEntry& entry);

/// Parses a record; `line` is used for ParseError messages.
babenko::BranchEntry parse_branch_record(std::string_view text, int line);

/// Empty or blank file gives an empty branch. Records must share N.
babenko::WaveBranch parse_branch(std::string_view content);
babenko::WaveBranch load_branch(const std::filesystem::path& path);

std::string format_branch(const babenko::WaveBranch& branch);
void store_branch(const babenko::WaveBranch& branch, const std::filesystem::path& path);

}  // namespace stokeslab::io
