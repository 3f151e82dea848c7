#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fieldnorm::unicode {

// Canonical composition (NFC) of UTF-8 text. Invalid sequences are replaced
// with U+FFFD by the converter.
std::string nfc(std::string_view utf8);

std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);

// NFC followed by decoding into code points.
std::u32string nfc_code_points(std::string_view utf8);

bool is_whitespace(char32_t c);

// Number of non-whitespace code points after NFC.
std::size_t count_non_whitespace(std::string_view utf8);

// Splits on any Unicode whitespace; empty pieces are dropped.
std::vector<std::string> split_whitespace(std::string_view utf8);

}  // namespace fieldnorm::unicode
