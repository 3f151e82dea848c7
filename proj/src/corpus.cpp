#include "fieldnorm/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "fieldnorm/errors.hpp"
#include "fieldnorm/text_util.hpp"
#include "fieldnorm/unicode.hpp"

namespace fieldnorm {

namespace {

constexpr std::size_t kFields = 5;

std::string strip_markers(std::string_view original) {
  std::string out;
  out.reserve(original.size());
  for (char c : original) {
    if (c != '&' && c != '#') out += c;
  }
  return out;
}

bool certainty_representable(double percent) {
  if (!(percent > 0.0 && percent <= 100.0)) return false;
  const double tenths = percent * 10.0;
  return std::fabs(tenths - std::round(tenths)) < 1e-6 && std::round(tenths) >= 1.0;
}

using Sink = std::function<void(std::size_t, std::string)>;

// Shared by parse_document (throwing sink) and validate_text (collecting sink).
// Lines that fail are reported and skipped.
CorpusDocument parse_with(std::string_view text, std::string id,
                          const ParseOptions& options, const Sink& report) {
  CorpusDocument doc;
  doc.id = std::move(id);
  const std::vector<std::string> lines = split_lines(text);
  std::size_t line_no = 0;
  for (const std::string& line : lines) {
    ++line_no;
    const std::vector<std::string_view> fields = split_tabs(line);
    const bool legacy = options.allow_legacy && fields.size() == kFields - 1;
    if (fields.size() != kFields && !legacy) {
      report(line_no, "expected " + std::to_string(kFields) +
                          " tab-separated fields, found " +
                          std::to_string(fields.size()));
      continue;
    }
    AlignedRecord rec;
    rec.original = std::string(fields[0]);
    if (rec.original.empty()) {
      report(line_no, "empty original field");
      continue;
    }
    if (rec.is_continuation()) {
      const bool blank = std::all_of(fields.begin() + 1, fields.end(),
                                     [](std::string_view f) { return f.empty(); });
      if (!blank) {
        report(line_no, "continuation line must leave the other fields blank");
        continue;
      }
      if (rec.original.size() == 1) {
        report(line_no, "continuation marker without text");
        continue;
      }
      if (rec.has_split_marker()) {
        report(line_no, "`#` on a continuation line");
        continue;
      }
      if (std::string_view(rec.original).substr(0, rec.original.size() - 1).find('&') !=
          std::string_view::npos) {
        report(line_no, "`&` inside the original field");
        continue;
      }
      doc.records.push_back(std::move(rec));
      continue;
    }
    if (rec.original.find('&') != std::string::npos) {
      report(line_no, "`&` inside the original field");
      continue;
    }
    if (std::count(rec.original.begin(), rec.original.end(), '#') > 1) {
      report(line_no, "more than one `#` in the original field");
      continue;
    }
    rec.normalized = std::string(fields[1]);
    rec.gloss = std::string(fields[2]);
    if (rec.normalized.empty()) {
      report(line_no, "empty normalized field");
      continue;
    }
    const auto certainty = parse_certainty(fields[3]);
    if (!certainty) {
      report(line_no, "malformed certainty `" + std::string(fields[3]) +
                          "` (expected e.g. 100.0%)");
      continue;
    }
    rec.certainty = *certainty;
    if (!legacy) {
      const auto tag = parse_pos_tag(fields[4]);
      if (!tag) {
        report(line_no, "unknown POS tag `" + std::string(fields[4]) + "`");
        continue;
      }
      rec.pos = *tag;
    }
    doc.records.push_back(std::move(rec));
  }
  if (!doc.records.empty() && doc.records.back().is_continuation()) {
    report(lines.size(), "document ends with a dangling `&` continuation");
  }
  return doc;
}

}  // namespace

std::vector<LogicalWord> logical_words(const CorpusDocument& doc) {
  std::vector<LogicalWord> words;
  LogicalWord pending;
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    const AlignedRecord& rec = doc.records[i];
    pending.original += strip_markers(rec.original);
    if (rec.is_continuation()) {
      pending.fragments.push_back(i);
      continue;
    }
    pending.record = i;
    words.push_back(std::move(pending));
    pending = LogicalWord{};
  }
  return words;
}

std::vector<std::string> normalized_tokens(const CorpusDocument& doc) {
  std::vector<std::string> out;
  for (const AlignedRecord& rec : doc.records) {
    if (!rec.is_continuation()) out.push_back(rec.normalized);
  }
  return out;
}

std::string format_certainty(double percent) {
  const long long tenths = std::llround(percent * 10.0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%lld%%", tenths / 10, tenths % 10);
  return buf;
}

std::optional<double> parse_certainty(std::string_view text) {
  if (text.size() < 4 || text.back() != '%') return std::nullopt;
  text.remove_suffix(1);
  const std::size_t dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot > 3 || dot + 2 != text.size()) {
    return std::nullopt;
  }
  long long tenths = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == dot) continue;
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    tenths = tenths * 10 + (text[i] - '0');
  }
  if (dot > 1 && text[0] == '0') return std::nullopt;
  if (tenths <= 0 || tenths > 1000) return std::nullopt;
  return static_cast<double>(tenths) / 10.0;
}

CorpusDocument parse_document(std::string_view text, std::string id,
                              const ParseOptions& options) {
  return parse_with(text, std::move(id), options,
                    [](std::size_t line, std::string what) {
                      throw ParseError(line, what);
                    });
}

std::vector<Violation> validate_text(std::string_view text, const ParseOptions& options) {
  std::vector<Violation> out;
  parse_with(text, "", options, [&](std::size_t line, std::string what) {
    out.push_back({line, std::move(what)});
  });
  return out;
}

std::string write_document(const CorpusDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    const AlignedRecord& rec = doc.records[i];
    const auto refuse = [&](const std::string& what) {
      throw SerializationError("record " + std::to_string(i + 1) + " (`" + rec.original +
                               "`): " + what);
    };
    for (const std::string* field : {&rec.original, &rec.normalized, &rec.gloss}) {
      if (field->find_first_of("\t\n") != std::string::npos) {
        refuse("field contains a tab or newline");
      }
    }
    if (rec.original.empty()) refuse("empty original field");
    if (std::count(rec.original.begin(), rec.original.end(), '&') >
        (rec.is_continuation() ? 1 : 0)) {
      refuse("`&` inside the original field");
    }
    if (rec.is_continuation()) {
      if (rec.original.size() == 1) refuse("continuation marker without text");
      if (rec.has_split_marker()) refuse("`#` on a continuation line");
      if (!rec.normalized.empty() || !rec.gloss.empty() || rec.pos) {
        refuse("continuation line must leave the other fields blank");
      }
      if (i + 1 == doc.records.size()) refuse("dangling `&` continuation");
      out += rec.original;
      out += "\t\t\t\t\n";
      continue;
    }
    if (std::count(rec.original.begin(), rec.original.end(), '#') > 1) {
      refuse("more than one `#` in the original field");
    }
    if (rec.normalized.empty()) refuse("empty normalized field");
    if (!certainty_representable(rec.certainty)) {
      refuse("certainty must be in (0, 100] with one decimal");
    }
    if (!rec.pos) refuse("missing POS tag");
    out += rec.original;
    out += '\t';
    out += rec.normalized;
    out += '\t';
    out += rec.gloss;
    out += '\t';
    out += format_certainty(rec.certainty);
    out += '\t';
    out += to_string(*rec.pos);
    out += '\n';
  }
  return out;
}

CorpusStats compute_stats(std::span<const CorpusDocument> docs) {
  CorpusStats stats;
  for (PosTag tag : kAllPosTags) stats.tag_histogram[tag] = 0;
  std::set<std::string> global_unique;
  std::size_t per_text_unique = 0;
  for (const CorpusDocument& doc : docs) {
    std::set<std::string> doc_unique;
    for (const AlignedRecord& rec : doc.records) {
      stats.total_chars += unicode::count_non_whitespace(strip_markers(rec.original));
      if (rec.is_continuation()) continue;
      ++stats.total_words;
      const std::string norm = unicode::nfc(rec.normalized);
      global_unique.insert(norm);
      doc_unique.insert(norm);
      if (rec.normalized == ".") ++stats.sentences;
      ++stats.tag_histogram[rec.pos.value_or(PosTag::UN)];
    }
    per_text_unique += doc_unique.size();
  }
  stats.documents = docs.size();
  stats.unique_words = global_unique.size();
  if (!docs.empty()) {
    const double n = static_cast<double>(docs.size());
    stats.mean_chars_per_text = static_cast<double>(stats.total_chars) / n;
    stats.mean_words_per_text = static_cast<double>(stats.total_words) / n;
    stats.mean_unique_words_per_text = static_cast<double>(per_text_unique) / n;
    stats.mean_sentences_per_text = static_cast<double>(stats.sentences) / n;
  }
  return stats;
}

std::string format_stats(const CorpusStats& stats) {
  std::string out = "parameter\ttotal count\n";
  char buf[64];
  const auto count_row = [&](const char* label, std::size_t value) {
    out += label;
    out += '\t';
    out += std::to_string(value);
    out += '\n';
  };
  const auto mean_row = [&](const char* label, double value) {
    std::snprintf(buf, sizeof buf, "%.2f", value);
    out += label;
    out += '\t';
    out += buf;
    out += '\n';
  };
  count_row("total non-whitespace characters", stats.total_chars);
  mean_row("mean characters / text", stats.mean_chars_per_text);
  count_row("total gold-standard words", stats.total_words);
  mean_row("mean words / text", stats.mean_words_per_text);
  count_row("total unique gold-standard words (incl. punctuation)", stats.unique_words);
  mean_row("mean unique words / text", stats.mean_unique_words_per_text);
  count_row("total sentences", stats.sentences);
  mean_row("mean sentences / text", stats.mean_sentences_per_text);

  out += "\nTag\tClass\t# Tokens\n";
  std::size_t total = 0;
  for (const auto& [tag, n] : stats.tag_histogram) {
    out += to_string(tag);
    out += '\t';
    out += description(tag);
    out += '\t';
    out += std::to_string(n);
    out += '\n';
    total += n;
  }
  out += "Total\t\t" + std::to_string(total) + "\n";
  return out;
}

}  // namespace fieldnorm
