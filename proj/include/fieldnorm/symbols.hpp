#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fieldnorm {

// A symbol series is a sequence of abstract class symbols, one code point each.
using Series = std::u32string;

struct SymbolMapping {
  std::u32string cluster;  // NFC code points
  char32_t symbol;
};

struct SymbolSeries {
  Series symbols;
  std::string source_word;
};

// One matched span of a word during segmentation.
struct Cluster {
  std::u32string text;
  char32_t symbol;
};

// Maps transcribed grapheme clusters to abstract class symbols.
//
// File format: UTF-8, one `cluster<TAB>class` mapping per line. Lines starting
// with `#` are comments; `# version: X` names the table version and
// `# alphabet: abc...` declares the class alphabet (otherwise the alphabet is
// the set of classes in use). Clusters are compared after NFC. Matching is
// greedy longest-cluster-first, left to right.
class SymbolClassTable {
 public:
  static SymbolClassTable parse(std::string_view text);
  static SymbolClassTable load(const std::filesystem::path& path);

  // Entries in file order.
  const std::vector<SymbolMapping>& entries() const { return entries_; }
  const std::string& version() const { return version_; }
  const std::set<char32_t>& alphabet() const { return alphabet_; }
  bool in_alphabet(char32_t symbol) const { return alphabet_.count(symbol) > 0; }

  // Longest-first segmentation of NFC code points; nullopt when some position
  // starts no cluster.
  std::optional<std::vector<Cluster>> segment(std::u32string_view word) const;

  // Reproduces the parsed document byte for byte.
  std::string to_text() const;

 private:
  struct Node {
    std::map<char32_t, std::size_t> next;
    std::optional<char32_t> symbol;
  };

  void insert(const std::u32string& cluster, char32_t symbol);

  std::vector<SymbolMapping> entries_;
  std::string version_;
  std::set<char32_t> alphabet_;
  std::vector<Node> trie_{Node{}};
  std::vector<std::string> lines_;
  bool trailing_newline_ = false;
};

// Reduces a transcribed word to its symbol series. Returns nullopt when the
// word is not reducible under the table (or is empty).
std::optional<SymbolSeries> symbol_series(std::string_view word,
                                          const SymbolClassTable& table);

}  // namespace fieldnorm
