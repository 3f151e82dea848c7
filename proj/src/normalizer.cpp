#include "fieldnorm/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "fieldnorm/errors.hpp"
#include "fieldnorm/unicode.hpp"

namespace fieldnorm {

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

MatchScore make_score(std::size_t distance, std::size_t query_len,
                      std::size_t candidate_len) {
  const std::size_t length = std::max(query_len, candidate_len);
  if (length == 0) {
    throw std::invalid_argument("match score undefined for two empty series");
  }
  return MatchScore{std::min(distance, length), length};
}

double convert_score(std::size_t distance, std::size_t query_len,
                     std::size_t candidate_len) {
  return make_score(distance, query_len, candidate_len).value();
}

double MatchScore::value() const {
  return 1.0 - static_cast<double>(distance) / static_cast<double>(length);
}

std::int64_t MatchScore::tenths_percent() const {
  const auto len = static_cast<std::int64_t>(length);
  const auto kept = static_cast<std::int64_t>(length - distance);
  return (2 * kept * 1000 + len) / (2 * len);
}

ScoreThreshold ScoreThreshold::from_double(double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError("threshold must lie in [0, 1]");
  }
  constexpr std::int64_t kDen = 1'000'000;
  return ScoreThreshold(std::llround(value * kDen), kDen);
}

bool ScoreThreshold::admits_fallback(const MatchScore& score) const {
  // (length - distance) / length <= num / den
  const auto kept = static_cast<std::int64_t>(score.length - score.distance);
  return kept * den_ <= num_ * static_cast<std::int64_t>(score.length);
}

SuffixPolicy::SuffixPolicy() : patterns_{Series{}} {}

SuffixPolicy SuffixPolicy::parse(std::string_view spec) {
  SuffixPolicy policy;
  policy.patterns_.clear();
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view piece = spec.substr(start, end - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece == "*") {
      policy.patterns_.push_back(Series{});
    } else if (!piece.empty()) {
      policy.patterns_.push_back(unicode::nfc_code_points(piece));
    }
    start = end + 1;
  }
  if (policy.patterns_.empty()) {
    throw ConfigError("suffix policy lists no patterns");
  }
  return policy;
}

std::optional<Series> SuffixPolicy::strip(const Series& series) const {
  for (const Series& pattern : patterns_) {
    const std::size_t cut = pattern.empty() ? 1 : pattern.size();
    if (series.size() <= cut) continue;
    if (!pattern.empty() && !std::u32string_view(series).ends_with(pattern)) continue;
    return series.substr(0, series.size() - cut);
  }
  return std::nullopt;
}

std::string SuffixPolicy::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ',';
    out += patterns_[i].empty() ? std::string("*") : unicode::to_utf8(patterns_[i]);
  }
  return out;
}

std::vector<TranscriptToken> tokenize_transcription(std::string_view text) {
  std::vector<TranscriptToken> tokens;
  std::vector<std::string> pending;
  const std::vector<std::string> chunks = unicode::split_whitespace(text);

  const auto emit = [&](std::string piece, bool split_after) {
    TranscriptToken token;
    token.position = tokens.size();
    token.split_after = split_after;
    if (!pending.empty()) {
      token.joined_from = std::move(pending);
      token.joined_from.push_back(piece);
      pending.clear();
      for (const std::string& f : token.joined_from) token.raw += f;
    } else {
      token.raw = std::move(piece);
    }
    tokens.push_back(std::move(token));
  };

  for (std::size_t c = 0; c < chunks.size(); ++c) {
    const std::string& chunk = chunks[c];
    const auto fail = [&](const std::string& what) {
      throw ParseError(c + 1, "token `" + chunk + "`: " + what);
    };
    if (chunk.back() == '&') {
      if (chunk.size() == 1) fail("continuation marker without text");
      const std::string fragment = chunk.substr(0, chunk.size() - 1);
      if (fragment.find('&') != std::string::npos) fail("`&` inside a token");
      if (fragment.find('#') != std::string::npos) fail("`#` in a continuation fragment");
      pending.push_back(fragment);
      continue;
    }
    if (chunk.find('&') != std::string::npos) fail("`&` inside a token");
    std::size_t start = 0;
    for (;;) {
      const std::size_t hash = chunk.find('#', start);
      if (hash == std::string::npos) {
        emit(chunk.substr(start), false);
        break;
      }
      if (hash == start || hash + 1 == chunk.size()) fail("misplaced `#`");
      emit(chunk.substr(start, hash - start), true);
      start = hash + 1;
    }
  }
  if (!pending.empty()) {
    throw ParseError(chunks.size(), "transcription ends with a dangling `&`");
  }
  return tokens;
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Punct: return "punct";
    case OutcomeKind::Foreign: return "foreign";
    case OutcomeKind::Matched: return "matched";
    case OutcomeKind::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool ranks_before(const Candidate& a, const Candidate& b) {
  const auto key = [](const Candidate& c) {
    return std::make_tuple(c.score.distance, c.variant.series().size(),
                           std::string_view(c.variant.entry->lemma),
                           !c.variant.entry->origin, c.variant.entry->pos,
                           c.variant.variant);
  };
  return key(a) < key(b);
}

// Closest variant in the first-class bucket of `series`.
std::optional<Candidate> best_candidate(const Series& series, const Lexicon& lexicon) {
  std::optional<Candidate> best;
  for (const VariantRef& v : lexicon.variants_by_first_class(series.front())) {
    const Candidate c{v, make_score(levenshtein(series, v.series()), series.size(),
                                    v.series().size())};
    if (!best || ranks_before(c, *best)) best = c;
  }
  return best;
}

NormalizationOutcome matched(const Candidate& c, bool used_fallback) {
  NormalizationOutcome out;
  out.kind = OutcomeKind::Matched;
  out.entry = c.variant.entry;
  out.variant = c.variant.variant;
  out.score = c.score;
  out.match_score = c.score.value();
  out.used_fallback = used_fallback;
  return out;
}

NormalizationOutcome normalize_with(const TranscriptToken& token, const Lexicon& lexicon,
                                    const SymbolClassTable& table,
                                    const NormalizerOptions& options,
                                    const std::regex* foreign) {
  NormalizationOutcome out;
  if (is_punctuation(token.raw, options)) {
    out.kind = OutcomeKind::Punct;
    return out;
  }
  const auto series = symbol_series(token.raw, table);
  if (!series || (foreign && std::regex_match(unicode::nfc(token.raw), *foreign))) {
    out.kind = OutcomeKind::Foreign;
    return out;
  }
  const Series& query = series->symbols;

  const auto exact = lexicon.exact_lookup(query);
  if (!exact.empty()) {
    std::optional<Candidate> pick;
    for (const LexiconEntry* entry : exact) {
      for (std::size_t v = 0; v < entry->variant_series.size(); ++v) {
        if (entry->variant_series[v] != query) continue;
        const Candidate c{{entry, v}, make_score(0, query.size(), query.size())};
        if (!pick || ranks_before(c, *pick)) pick = c;
      }
    }
    auto result = matched(*pick, false);
    result.best_score = 1.0;
    return result;
  }

  const auto best = best_candidate(query, lexicon);
  if (!best) {
    out.kind = OutcomeKind::Unknown;
    return out;
  }

  if (options.threshold.admits_fallback(best->score)) {
    std::optional<Candidate> alternate;
    Series stemmed = query;
    for (std::size_t level = 0; level < options.suffix_depth; ++level) {
      auto next = options.suffix_policy.strip(stemmed);
      if (!next) break;
      stemmed = std::move(*next);
      auto alt = best_candidate(stemmed, lexicon);
      if (alt && (!alternate || alt->score.distance < alternate->score.distance)) {
        alternate = alt;
      }
    }
    if (alternate && alternate->score.distance < best->score.distance) {
      auto result = matched(*alternate, true);
      result.best_score = best->score.value();
      return result;
    }
  }
  auto result = matched(*best, false);
  result.best_score = best->score.value();
  return result;
}

std::optional<std::regex> compile_foreign(const NormalizerOptions& options) {
  if (!options.foreign_pattern) return std::nullopt;
  try {
    return std::regex(*options.foreign_pattern, std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw ConfigError("invalid foreign pattern: " + std::string(e.what()));
  }
}

}  // namespace

std::vector<Candidate> rank_candidates(const Series& series, const Lexicon& lexicon,
                                       std::size_t limit) {
  std::vector<Candidate> all;
  if (series.empty()) return all;
  for (const VariantRef& v : lexicon.variants_by_first_class(series.front())) {
    all.push_back({v, make_score(levenshtein(series, v.series()), series.size(),
                                 v.series().size())});
  }
  std::sort(all.begin(), all.end(), ranks_before);
  std::vector<Candidate> out;
  for (const Candidate& c : all) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Candidate& o) {
      return o.variant.entry == c.variant.entry;
    });
    if (seen) continue;
    out.push_back(c);
    if (limit != 0 && out.size() == limit) break;
  }
  return out;
}

bool is_punctuation(std::string_view raw, const NormalizerOptions& options) {
  const std::u32string points = unicode::nfc_code_points(raw);
  if (points.empty()) return false;
  return std::all_of(points.begin(), points.end(), [&](char32_t c) {
    return options.punctuation.find(c) != std::u32string::npos;
  });
}

NormalizationOutcome normalize_token(const TranscriptToken& token, const Lexicon& lexicon,
                                     const SymbolClassTable& table,
                                     const NormalizerOptions& options) {
  const auto foreign = compile_foreign(options);
  return normalize_with(token, lexicon, table, options, foreign ? &*foreign : nullptr);
}

std::vector<std::pair<TranscriptToken, NormalizationOutcome>> normalize_document(
    const std::vector<TranscriptToken>& tokens, const Lexicon& lexicon,
    const SymbolClassTable& table, const NormalizerOptions& options) {
  const auto foreign = compile_foreign(options);
  std::vector<std::pair<TranscriptToken, NormalizationOutcome>> out;
  out.reserve(tokens.size());
  for (const TranscriptToken& token : tokens) {
    out.emplace_back(token, normalize_with(token, lexicon, table, options,
                                           foreign ? &*foreign : nullptr));
  }
  return out;
}

}  // namespace fieldnorm
