#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fieldnorm {

// Lines without their terminators. A final newline does not open a new line.
std::vector<std::string> split_lines(std::string_view text);

std::vector<std::string_view> split_tabs(std::string_view line);

std::string_view strip_cr(std::string_view line);
std::string_view trim(std::string_view s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fieldnorm
