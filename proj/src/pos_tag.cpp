#include "fieldnorm/pos_tag.hpp"

namespace fieldnorm {

namespace {

struct TagInfo {
  std::string_view name;
  std::string_view description;
};

constexpr std::array<TagInfo, kPosTagCount> kInfo = {{
    {"CC", "Conjunction"},
    {"CD", "Cardinal Number"},
    {"DT", "Determiner"},
    {"FW", "Foreign Word"},
    {"JJ", "Adjective"},
    {"NN", "Common Noun"},
    {"NP", "Proper Noun"},
    {"ON", "Onomatopoeia"},
    {"PN", "Pronoun"},
    {"PP", "Adposition-like Element"},
    {"PU", "Punctuation"},
    {"RB", "Adverb"},
    {"UH", "Interjection"},
    {"UN", "Unknown"},
    {"VB", "Verb"},
}};

}  // namespace

std::string_view to_string(PosTag tag) {
  return kInfo[static_cast<std::size_t>(tag)].name;
}

std::string_view description(PosTag tag) {
  return kInfo[static_cast<std::size_t>(tag)].description;
}

std::optional<PosTag> parse_pos_tag(std::string_view text) {
  for (PosTag tag : kAllPosTags) {
    if (to_string(tag) == text) return tag;
  }
  return std::nullopt;
}

bool is_content_tag(PosTag tag) {
  return tag == PosTag::NN || tag == PosTag::VB || tag == PosTag::JJ ||
         tag == PosTag::RB;
}

}  // namespace fieldnorm
