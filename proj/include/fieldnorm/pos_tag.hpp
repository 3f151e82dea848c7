#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace fieldnorm {

// Closed part-of-speech inventory of the corpus.
enum class PosTag {
  CC,  // conjunction
  CD,  // cardinal number
  DT,  // determiner
  FW,  // foreign word
  JJ,  // adjective
  NN,  // common noun
  NP,  // proper noun
  ON,  // onomatopoeia
  PN,  // pronoun
  PP,  // adposition-like element
  PU,  // punctuation
  RB,  // adverb / particle
  UH,  // interjection
  UN,  // unknown
  VB,  // verb
};

inline constexpr std::size_t kPosTagCount = 15;

inline constexpr std::array<PosTag, kPosTagCount> kAllPosTags = {
    PosTag::CC, PosTag::CD, PosTag::DT, PosTag::FW, PosTag::JJ,
    PosTag::NN, PosTag::NP, PosTag::ON, PosTag::PN, PosTag::PP,
    PosTag::PU, PosTag::RB, PosTag::UH, PosTag::UN, PosTag::VB};

std::string_view to_string(PosTag tag);
std::string_view description(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view text);

// Tags whose lexicon entries may only list the base form.
bool is_content_tag(PosTag tag);

}  // namespace fieldnorm
