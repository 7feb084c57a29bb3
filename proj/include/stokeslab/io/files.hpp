#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace stokeslab::io {

/// Writes through a sibling temporary and renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Whole file as a string; IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace stokeslab::io
