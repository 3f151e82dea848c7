#include "fieldnorm/lexicon.hpp"

#include <algorithm>
#include <tuple>

#include "fieldnorm/errors.hpp"
#include "fieldnorm/text_util.hpp"
#include "fieldnorm/unicode.hpp"

namespace fieldnorm {

namespace {

std::vector<std::string> split_variants(std::string_view field) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= field.size()) {
    std::size_t end = field.find(',', start);
    if (end == std::string_view::npos) end = field.size();
    const std::string_view piece = trim(field.substr(start, end - start));
    if (!piece.empty()) out.push_back(unicode::nfc(piece));
    start = end + 1;
  }
  return out;
}

}  // namespace

Lexicon Lexicon::parse(std::string_view text, const SymbolClassTable& table) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (const std::string& raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    if (trim(line).empty() || line.front() == '#') continue;

    const auto where = [&] { return "lexicon line " + std::to_string(line_no) + ": "; };
    const std::vector<std::string_view> fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 5) {
      throw ConfigError(where() +
                        "expected lemma, gloss, pos[, variants[, origin]]");
    }
    LexiconEntry entry;
    entry.lemma = unicode::nfc(trim(fields[0]));
    entry.gloss = std::string(fields[1]);
    if (entry.lemma.empty()) throw ConfigError(where() + "empty lemma");

    const auto pos = parse_pos_tag(trim(fields[2]));
    if (!pos) {
      throw ConfigError(where() + "unknown POS tag `" + std::string(fields[2]) + "`");
    }
    entry.pos = *pos;

    entry.variant_forms.push_back(entry.lemma);
    if (fields.size() >= 4) {
      for (std::string& v : split_variants(fields[3])) {
        if (std::find(entry.variant_forms.begin(), entry.variant_forms.end(), v) ==
            entry.variant_forms.end()) {
          entry.variant_forms.push_back(std::move(v));
        }
      }
    }
    if (fields.size() == 5) {
      const std::string_view flag = trim(fields[4]);
      if (flag == "origin") {
        entry.origin = true;
      } else if (!flag.empty()) {
        throw ConfigError(where() + "last column must be `origin` or empty");
      }
    }
    if (is_content_tag(entry.pos) && entry.variant_forms.size() > 1) {
      throw ConfigError(where() + "content word `" + entry.lemma + "` (" +
                        std::string(to_string(entry.pos)) +
                        ") may only list its base form");
    }
    for (const std::string& v : entry.variant_forms) {
      auto series = symbol_series(v, table);
      if (!series) {
        throw ConfigError(where() + "variant `" + v +
                          "` is not reducible by the symbol table");
      }
      entry.variant_series.push_back(std::move(series->symbols));
    }
    for (const LexiconEntry& other : lex.entries_) {
      if (other.lemma == entry.lemma && other.pos == entry.pos) {
        throw ConfigError(where() + "duplicate entry `" + entry.lemma + "` " +
                          std::string(to_string(entry.pos)));
      }
    }
    lex.entries_.push_back(std::move(entry));
  }

  std::stable_sort(lex.entries_.begin(), lex.entries_.end(),
                   [](const LexiconEntry& a, const LexiconEntry& b) {
                     return std::tie(a.lemma, a.pos, a.gloss) <
                            std::tie(b.lemma, b.pos, b.gloss);
                   });

  for (std::size_t i = 0; i < lex.entries_.size(); ++i) {
    const LexiconEntry& e = lex.entries_[i];
    lex.by_lemma_.emplace(e.lemma, i);
    for (std::size_t v = 0; v < e.variant_series.size(); ++v) {
      const Series& s = e.variant_series[v];
      auto& exact = lex.by_series_[s];
      if (exact.empty() || exact.back() != i) exact.push_back(i);
      auto& bucket = lex.entry_buckets_[s.front()];
      if (bucket.empty() || bucket.back() != i) bucket.push_back(i);
      lex.variant_buckets_[s.front()].emplace_back(i, v);
    }
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path,
                      const SymbolClassTable& table) {
  return parse(read_file(path), table);
}

std::vector<const LexiconEntry*> Lexicon::exact_lookup(const Series& series) const {
  std::vector<const LexiconEntry*> out;
  if (const auto it = by_series_.find(series); it != by_series_.end()) {
    for (std::size_t i : it->second) out.push_back(&entries_[i]);
  }
  return out;
}

std::vector<const LexiconEntry*> Lexicon::candidates_by_first_class(
    char32_t symbol) const {
  std::vector<const LexiconEntry*> out;
  if (const auto it = entry_buckets_.find(symbol); it != entry_buckets_.end()) {
    for (std::size_t i : it->second) out.push_back(&entries_[i]);
  }
  return out;
}

std::vector<VariantRef> Lexicon::variants_by_first_class(char32_t symbol) const {
  std::vector<VariantRef> out;
  if (const auto it = variant_buckets_.find(symbol); it != variant_buckets_.end()) {
    for (const auto& [entry, variant] : it->second) {
      out.push_back({&entries_[entry], variant});
    }
  }
  return out;
}

std::vector<const LexiconEntry*> Lexicon::by_lemma(std::string_view lemma) const {
  std::vector<const LexiconEntry*> out;
  const std::string key = unicode::nfc(lemma);
  const auto [lo, hi] = by_lemma_.equal_range(key);
  for (auto it = lo; it != hi; ++it) out.push_back(&entries_[it->second]);
  return out;
}

std::vector<const LexiconEntry*> Lexicon::by_form(std::string_view form) const {
  std::vector<const LexiconEntry*> out;
  const std::string key = unicode::nfc(form);
  for (const LexiconEntry& e : entries_) {
    if (std::find(e.variant_forms.begin(), e.variant_forms.end(), key) !=
        e.variant_forms.end()) {
      out.push_back(&e);
    }
  }
  return out;
}

std::string Lexicon::serialize() const {
  std::string out;
  for (const LexiconEntry& e : entries_) {
    out += e.lemma;
    out += '\t';
    out += e.gloss;
    out += '\t';
    out += to_string(e.pos);
    out += '\t';
    for (std::size_t v = 0; v < e.variant_forms.size(); ++v) {
      if (v > 0) out += ',';
      out += e.variant_forms[v];
    }
    if (e.origin) out += "\torigin";
    out += '\n';
  }
  return out;
}

}  // namespace fieldnorm
