#include "fieldnorm/symbols.hpp"


#include "fieldnorm/errors.hpp"
#include "fieldnorm/text_util.hpp"
#include "fieldnorm/unicode.hpp"

namespace fieldnorm {

namespace {

constexpr std::string_view kVersionDirective = "# version:";
constexpr std::string_view kAlphabetDirective = "# alphabet:";

}  // namespace

SymbolClassTable SymbolClassTable::parse(std::string_view text) {
  SymbolClassTable table;
  table.trailing_newline_ = !text.empty() && text.back() == '\n';
  table.lines_ = split_lines(text);

  std::optional<std::set<char32_t>> declared;
  std::size_t line_no = 0;
  for (const std::string& raw : table.lines_) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with(kVersionDirective)) {
        table.version_ = std::string(trim(line.substr(kVersionDirective.size())));
      } else if (line.starts_with(kAlphabetDirective)) {
        std::set<char32_t> alphabet;
        for (char32_t c : unicode::nfc_code_points(
                 trim(line.substr(kAlphabetDirective.size())))) {
          if (!unicode::is_whitespace(c)) alphabet.insert(c);
        }
        declared = std::move(alphabet);
      }
      continue;
    }
    const std::vector<std::string_view> fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ConfigError("symbol table line " + std::to_string(line_no) +
                        ": expected `cluster<TAB>class`");
    }
    const std::u32string cluster = unicode::nfc_code_points(fields[0]);
    const std::u32string symbol = unicode::nfc_code_points(fields[1]);
    if (symbol.size() != 1 || unicode::is_whitespace(symbol[0])) {
      throw ConfigError("symbol table line " + std::to_string(line_no) +
                        ": class must be a single symbol, got `" +
                        std::string(fields[1]) + "`");
    }
    for (const SymbolMapping& existing : table.entries_) {
      if (existing.cluster == cluster) {
        throw ConfigError("duplicate cluster `" + unicode::to_utf8(cluster) +
                          "` in symbol table (line " +
                          std::to_string(line_no) + ")");
      }
    }
    table.entries_.push_back({cluster, symbol[0]});
    table.insert(cluster, symbol[0]);
  }

  if (table.entries_.empty()) {
    throw ConfigError("symbol table has no mappings");
  }
  if (declared) {
    for (const SymbolMapping& m : table.entries_) {
      if (declared->count(m.symbol) == 0) {
        throw ConfigError("class `" + unicode::to_utf8(std::u32string(1, m.symbol)) +
                          "` of cluster `" + unicode::to_utf8(m.cluster) +
                          "` is not in the declared alphabet");
      }
    }
    table.alphabet_ = std::move(*declared);
  } else {
    for (const SymbolMapping& m : table.entries_) table.alphabet_.insert(m.symbol);
  }
  return table;
}

SymbolClassTable SymbolClassTable::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

void SymbolClassTable::insert(const std::u32string& cluster, char32_t symbol) {
  std::size_t node = 0;
  for (char32_t c : cluster) {
    auto it = trie_[node].next.find(c);
    if (it == trie_[node].next.end()) {
      trie_.push_back(Node{});
      it = trie_[node].next.emplace(c, trie_.size() - 1).first;
    }
    node = it->second;
  }
  trie_[node].symbol = symbol;
}

std::optional<std::vector<Cluster>> SymbolClassTable::segment(
    std::u32string_view word) const {
  std::vector<Cluster> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t node = 0;
    std::size_t best_len = 0;
    char32_t best_symbol = 0;
    for (std::size_t i = pos; i < word.size(); ++i) {
      const auto it = trie_[node].next.find(word[i]);
      if (it == trie_[node].next.end()) break;
      node = it->second;
      if (trie_[node].symbol) {
        best_len = i - pos + 1;
        best_symbol = *trie_[node].symbol;
      }
    }
    if (best_len == 0) return std::nullopt;
    out.push_back({std::u32string(word.substr(pos, best_len)), best_symbol});
    pos += best_len;
  }
  return out;
}

std::string SymbolClassTable::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    out += lines_[i];
    if (i + 1 < lines_.size() || trailing_newline_) out += '\n';
  }
  return out;
}

std::optional<SymbolSeries> symbol_series(std::string_view word,
                                          const SymbolClassTable& table) {
  const std::u32string points = unicode::nfc_code_points(word);
  if (points.empty()) return std::nullopt;
  const auto clusters = table.segment(points);
  if (!clusters) return std::nullopt;
  SymbolSeries series{{}, std::string(word)};
  series.symbols.reserve(clusters->size());
  for (const Cluster& c : *clusters) series.symbols.push_back(c.symbol);
  return series;
}

}  // namespace fieldnorm
