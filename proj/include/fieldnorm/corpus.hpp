#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fieldnorm/pos_tag.hpp"

namespace fieldnorm {

inline constexpr std::string_view kPuncMarker = "[punc]";
inline constexpr std::string_view kForeignMarker = "[foreign]";
inline constexpr std::string_view kUnknownMarker = "[unknown]";

// One line of a corpus file: original, normalized, gloss, certainty, POS.
// A continuation line (original ending in `&`) leaves the rest blank.
struct AlignedRecord {
  std::string original;
  std::string normalized;
  std::string gloss;
  double certainty = 100.0;  // percent, one decimal
  std::optional<PosTag> pos;  // empty on continuation lines or unretagged legacy lines

  bool is_continuation() const { return !original.empty() && original.back() == '&'; }
  bool has_split_marker() const { return original.find('#') != std::string::npos; }

  bool operator==(const AlignedRecord&) const = default;
};

struct CorpusDocument {
  std::string id;
  std::vector<AlignedRecord> records;
  std::string source;

  bool operator==(const CorpusDocument&) const = default;
};

// A gold-standard word: the annotated record plus the continuation fragments
// joined in front of it.
struct LogicalWord {
  std::string original;  // fragments joined, `&`/`#` markers removed
  std::size_t record = 0;
  std::vector<std::size_t> fragments;
};

std::vector<LogicalWord> logical_words(const CorpusDocument& doc);

// Normalized field of every logical word, in order.
std::vector<std::string> normalized_tokens(const CorpusDocument& doc);

std::string format_certainty(double percent);
std::optional<double> parse_certainty(std::string_view text);

struct ParseOptions {
  // Accept four-field lines (no POS column); their `pos` stays empty.
  bool allow_legacy = false;
};

CorpusDocument parse_document(std::string_view text, std::string id,
                              const ParseOptions& options = {});

// Throws SerializationError naming the first violated invariant.
std::string write_document(const CorpusDocument& doc);

struct Violation {
  std::size_t line = 0;  // 1-based; 0 for whole-document problems
  std::string message;
};

// Collects every violation instead of stopping at the first.
std::vector<Violation> validate_text(std::string_view text,
                                     const ParseOptions& options = {});

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t total_chars = 0;
  std::size_t total_words = 0;
  std::size_t unique_words = 0;
  std::size_t sentences = 0;
  double mean_chars_per_text = 0.0;
  double mean_words_per_text = 0.0;
  double mean_unique_words_per_text = 0.0;
  double mean_sentences_per_text = 0.0;
  std::map<PosTag, std::size_t> tag_histogram;
};

CorpusStats compute_stats(std::span<const CorpusDocument> docs);
std::string format_stats(const CorpusStats& stats);

}  // namespace fieldnorm
