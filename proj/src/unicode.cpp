#include "fieldnorm/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace fieldnorm::unicode {

namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *norm;
}

}  // namespace

std::string nfc(std::string_view utf8) {
  const icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UErrorCode status = U_ZERO_ERROR;
  const icu::UnicodeString out = nfc_instance().normalize(src, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("NFC normalization failed");
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::u32string to_u32(std::string_view utf8) {
  const icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  std::u32string out;
  out.reserve(static_cast<std::size_t>(src.length()));
  for (int32_t i = 0; i < src.length();) {
    const UChar32 c = src.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

std::string to_utf8(std::u32string_view text) {
  icu::UnicodeString s;
  for (char32_t c : text) s.append(static_cast<UChar32>(c));
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::u32string nfc_code_points(std::string_view utf8) {
  return to_u32(nfc(utf8));
}

bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

std::size_t count_non_whitespace(std::string_view utf8) {
  std::size_t n = 0;
  for (char32_t c : nfc_code_points(utf8)) {
    if (!is_whitespace(c)) ++n;
  }
  return n;
}

std::vector<std::string> split_whitespace(std::string_view utf8) {
  std::vector<std::string> pieces;
  std::u32string current;
  for (char32_t c : to_u32(utf8)) {
    if (is_whitespace(c)) {
      if (!current.empty()) pieces.push_back(to_utf8(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) pieces.push_back(to_utf8(current));
  return pieces;
}

}  // namespace fieldnorm::unicode
