#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace agreekit {

std::string read_file(const std::filesystem::path& path);

// Write-temp-then-rename so readers never observe partial files.
void atomic_write_file(const std::filesystem::path& path,
                       const std::string& content);

// Splits on '\n', dropping a trailing empty line and CR remnants.
std::vector<std::string> split_lines(const std::string& text);

}  // namespace agreekit
