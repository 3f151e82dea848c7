#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fieldnorm/pos_tag.hpp"
#include "fieldnorm/symbols.hpp"

namespace fieldnorm {

struct LexiconEntry {
  std::string lemma;
  std::string gloss;
  PosTag pos = PosTag::UN;
  // Always contains the lemma, first.
  std::vector<std::string> variant_forms;
  // Parallel to variant_forms.
  std::vector<Series> variant_series;
  // Marks the originating class among homographs with different tags.
  bool origin = false;
};

// One indexed variant of an entry.
struct VariantRef {
  const LexiconEntry* entry;
  std::size_t variant;

  const Series& series() const { return entry->variant_series[variant]; }
  const std::string& form() const { return entry->variant_forms[variant]; }
};

// Dictionary of target normalized forms, indexed by symbol series and by the
// first class symbol of each variant series.
//
// File format: UTF-8, one entry per line,
//   lemma<TAB>gloss<TAB>pos[<TAB>variant1,variant2,...[<TAB>origin]]
// `#` lines and blank lines are skipped. Entries are kept ordered by
// (lemma, pos, gloss).
class Lexicon {
 public:
  static Lexicon parse(std::string_view text, const SymbolClassTable& table);
  static Lexicon load(const std::filesystem::path& path,
                      const SymbolClassTable& table);

  std::span<const LexiconEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Entries with a variant whose series equals `series`, lemma order.
  std::vector<const LexiconEntry*> exact_lookup(const Series& series) const;

  // Entries having at least one variant whose series starts with `symbol`.
  std::vector<const LexiconEntry*> candidates_by_first_class(char32_t symbol) const;

  // Every variant whose series starts with `symbol`.
  std::vector<VariantRef> variants_by_first_class(char32_t symbol) const;

  // Entries whose lemma equals `lemma` after NFC.
  std::vector<const LexiconEntry*> by_lemma(std::string_view lemma) const;

  // Entries listing `form` among their variant forms.
  std::vector<const LexiconEntry*> by_form(std::string_view form) const;

  // Canonical text form; identical input gives identical bytes.
  std::string serialize() const;

 private:
  using VariantKey = std::pair<std::size_t, std::size_t>;

  std::vector<LexiconEntry> entries_;
  std::map<Series, std::vector<std::size_t>> by_series_;
  std::map<char32_t, std::vector<std::size_t>> entry_buckets_;
  std::map<char32_t, std::vector<VariantKey>> variant_buckets_;
  std::multimap<std::string, std::size_t, std::less<>> by_lemma_;
};

}  // namespace fieldnorm
