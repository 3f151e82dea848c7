#pragma once

#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fieldnorm/lexicon.hpp"
#include "fieldnorm/symbols.hpp"

namespace fieldnorm {

/// Minimum number of single-symbol insertions, deletions and substitutions
/// turning `a` into `b`. Two-row dynamic program, O(|a|·|b|) time.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Similarity in [0, 1]: 1 − distance / max(query_len, candidate_len).
/// Throws std::invalid_argument when both lengths are zero.
double convert_score(std::size_t distance, std::size_t query_len,
                     std::size_t candidate_len);

/// A similarity kept as the exact ratio (length − distance) / length so that
/// threshold comparisons do not depend on floating-point rounding.
struct MatchScore {
  std::size_t distance = 0;
  std::size_t length = 0;  // max(query, candidate)

  double value() const;
  // Score as a percentage in tenths, rounded half up (e.g. 750 for 75.0%).
  std::int64_t tenths_percent() const;
};

MatchScore make_score(std::size_t distance, std::size_t query_len,
                      std::size_t candidate_len);

/// Decimal threshold stored as a ratio; `admits_fallback` is the `≤` test that
/// triggers the suffix-stripped search.
class ScoreThreshold {
 public:
  ScoreThreshold() = default;
  static ScoreThreshold from_double(double value);

  bool admits_fallback(const MatchScore& score) const;
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  ScoreThreshold(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 7;
  std::int64_t den_ = 10;
};

/// Ordered list of series suffixes to strip before the fallback search.
/// `*` strips exactly one trailing class symbol. The first pattern that
/// matches and leaves a non-empty stem is applied.
class SuffixPolicy {
 public:
  SuffixPolicy();  // `*`
  static SuffixPolicy parse(std::string_view spec);

  std::optional<Series> strip(const Series& series) const;
  std::string to_string() const;

 private:
  // Empty pattern stands for the one-symbol wildcard.
  std::vector<Series> patterns_;
};

struct NormalizerOptions {
  SuffixPolicy suffix_policy;
  ScoreThreshold threshold;
  // Number of successive suffix strips tried; 1 follows the single-strip rule.
  std::size_t suffix_depth = 1;
  // A token made only of these code points is punctuation.
  std::u32string punctuation = U",.;:!?¿¡\"“”«»()[]{}…-–—";
  // ECMAScript pattern over the NFC token; a full match marks it foreign.
  std::optional<std::string> foreign_pattern;
};

struct TranscriptToken {
  std::string raw;
  std::size_t position = 0;
  // Fragments when the token was assembled across `&` continuations.
  std::vector<std::string> joined_from;
  // The source had a `#` right after this token (missing space).
  bool split_after = false;
};

/// Splits a transcription on whitespace. A piece ending in `&` is joined to
/// the next piece; a `#` inside a piece separates two tokens.
/// Throws ParseError on a dangling `&` or a misplaced `#`.
std::vector<TranscriptToken> tokenize_transcription(std::string_view text);

enum class OutcomeKind { Punct, Foreign, Matched, Unknown };

std::string_view to_string(OutcomeKind kind);

struct Candidate {
  VariantRef variant;
  MatchScore score;
};

struct NormalizationOutcome {
  OutcomeKind kind = OutcomeKind::Unknown;
  const LexiconEntry* entry = nullptr;  // set iff Matched
  std::size_t variant = 0;
  std::optional<double> match_score;    // set iff Matched
  std::optional<MatchScore> score;      // set iff Matched
  // Score of the full-series best before any fallback search.
  std::optional<double> best_score;
  bool used_fallback = false;
};

/// Ranked candidates for `series`, restricted to variants sharing its first
/// class symbol: ascending distance, then shorter variant series, then lemma.
/// One row per entry (its closest variant). `limit` of 0 means no limit.
std::vector<Candidate> rank_candidates(const Series& series, const Lexicon& lexicon,
                                       std::size_t limit = 0);

bool is_punctuation(std::string_view raw, const NormalizerOptions& options);

NormalizationOutcome normalize_token(const TranscriptToken& token,
                                     const Lexicon& lexicon,
                                     const SymbolClassTable& table,
                                     const NormalizerOptions& options = {});

std::vector<std::pair<TranscriptToken, NormalizationOutcome>> normalize_document(
    const std::vector<TranscriptToken>& tokens, const Lexicon& lexicon,
    const SymbolClassTable& table, const NormalizerOptions& options = {});

}  // namespace fieldnorm
