#include <chrono>
#include <random>

#include "doctest.h"

#include "fieldnorm/errors.hpp"
#include "fieldnorm/normalizer.hpp"
#include "fieldnorm/unicode.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace fieldnorm;

namespace {

// One class per letter a..h, so series equal spelling.
const SymbolClassTable& letter_table() {
  static const SymbolClassTable t =
      SymbolClassTable::parse("a\ta\nb\tb\nc\tc\nd\td\ne\te\nf\tf\ng\tg\nh\th\n");
  return t;
}

TranscriptToken tok(std::string raw) { return TranscriptToken{std::move(raw), 0, {}, false}; }

}  // namespace

TEST_CASE("levenshtein basics") {
  CHECK(levenshtein(U"", U"abc") == 3);
  CHECK(levenshtein(U"abc", U"") == 3);
  CHECK(levenshtein(U"", U"") == 0);
  for (const char32_t* s : {U"", U"a", U"kyn", U"mak"}) CHECK(levenshtein(s, s) == 0);
}

TEST_CASE("kitten/sitting distance is frozen from the recursive oracle") {
  REQUIRE(oracle::levenshtein(U"kitten", U"sitting") == 3);
  CHECK(levenshtein(U"kitten", U"sitting") == 3);
}

TEST_CASE("levenshtein is a metric on every sequence up to length 6 over 3 symbols") {
  const auto seqs = oracle::all_sequences<std::u32string>({U'a', U'b', U'c'}, 6);
  REQUIRE(seqs.size() == 1093);
  const std::size_t n = seqs.size();
  std::vector<std::uint8_t> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = oracle::levenshtein(seqs[i], seqs[j]);
      dist[i * n + j] = static_cast<std::uint8_t>(d);
    }
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = dist[i * n + j];
      const std::size_t la = seqs[i].size();
      const std::size_t lb = seqs[j].size();
      if (levenshtein(seqs[i], seqs[j]) != d) ++failures;
      if (d != dist[j * n + i]) ++failures;
      if ((d == 0) != (i == j)) ++failures;
      if (d < (la > lb ? la - lb : lb - la)) ++failures;
    }
  }
  CHECK(failures == 0);

  std::size_t triangle_failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned ik = dist[i * n + k];
      const std::uint8_t* row_k = &dist[k * n];
      const std::uint8_t* row_i = &dist[i * n];
      for (std::size_t j = 0; j < n; ++j) {
        triangle_failures += row_i[j] > ik + row_k[j];
      }
    }
  }
  CHECK(triangle_failures == 0);
}

TEST_CASE("convert_score") {
  CHECK(convert_score(0, 4, 4) == 1.0);
  CHECK(convert_score(2, 4, 4) == 0.5);
  CHECK(convert_score(4, 4, 2) == 0.0);
  CHECK(convert_score(1, 2, 4) == doctest::Approx(0.75));
  CHECK_THROWS_AS(convert_score(0, 0, 0), std::invalid_argument);
}

TEST_CASE("score percentages round half up in tenths") {
  CHECK(make_score(1, 3, 3).tenths_percent() == 667);
  CHECK(make_score(0, 3, 3).tenths_percent() == 1000);
  CHECK(make_score(1, 8, 8).tenths_percent() == 875);
  CHECK(make_score(5, 5, 5).tenths_percent() == 0);
}

TEST_CASE("threshold comparison is exact at the boundary") {
  const ScoreThreshold t;  // 0.7
  CHECK(t.admits_fallback(make_score(3, 10, 10)));   // exactly 0.7
  CHECK_FALSE(t.admits_fallback(make_score(2, 10, 10)));
  CHECK(t.admits_fallback(make_score(2, 5, 5)));
  CHECK_FALSE(t.admits_fallback(make_score(1, 4, 4)));  // 0.75
  CHECK(ScoreThreshold::from_double(0.75).admits_fallback(make_score(1, 4, 4)));
  CHECK_THROWS_AS(ScoreThreshold::from_double(1.5), ConfigError);
}

TEST_CASE("suffix policy") {
  const SuffixPolicy one;
  CHECK(one.strip(U"abc") == Series(U"ab"));
  CHECK_FALSE(one.strip(U"a").has_value());
  const auto p = SuffixPolicy::parse("bc, c ,*");
  CHECK(p.strip(U"aabc") == Series(U"aa"));
  CHECK(p.strip(U"bc") == Series(U"b"));
  CHECK(p.strip(U"abd") == Series(U"ab"));
  CHECK(p.to_string() == "bc,c,*");
  const auto only = SuffixPolicy::parse("xy");
  CHECK_FALSE(only.strip(U"abc").has_value());
  CHECK_THROWS_AS(SuffixPolicy::parse(" , "), ConfigError);
}

TEST_CASE("tokenizer joins & fragments and splits at #") {
  const auto tokens = tokenize_transcription("hi' ts'u& móno ab#cd ,\n");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].raw == "hi'");
  CHECK(tokens[1].raw == "ts'umóno");
  CHECK(tokens[1].joined_from == std::vector<std::string>{"ts'u", "móno"});
  CHECK(tokens[2].raw == "ab");
  CHECK(tokens[2].split_after);
  CHECK(tokens[3].raw == "cd");
  CHECK_FALSE(tokens[3].split_after);
  CHECK(tokens[4].raw == ",");
  for (std::size_t i = 0; i < tokens.size(); ++i) CHECK(tokens[i].position == i);

  CHECK(tokenize_transcription("").empty());
  CHECK_THROWS_AS(tokenize_transcription("ab&"), ParseError);
  CHECK_THROWS_AS(tokenize_transcription("ab & cd"), ParseError);
  CHECK_THROWS_AS(tokenize_transcription("#ab"), ParseError);
  CHECK_THROWS_AS(tokenize_transcription("ab#"), ParseError);
  CHECK_THROWS_AS(tokenize_transcription("a#b& c"), ParseError);
}

TEST_CASE("punctuation path") {
  const auto lex = Lexicon::parse("abh\tx\tNN\n", letter_table());
  const auto out = normalize_token(tok(","), lex, letter_table());
  CHECK(out.kind == OutcomeKind::Punct);
  CHECK(out.entry == nullptr);
  CHECK_FALSE(out.match_score.has_value());
  CHECK(normalize_token(tok("?!"), lex, letter_table()).kind == OutcomeKind::Punct);
}

TEST_CASE("foreign path: unreducible token or configured pattern") {
  const auto lex = Lexicon::parse("abh\tx\tNN\n", letter_table());
  CHECK(normalize_token(tok("abz"), lex, letter_table()).kind == OutcomeKind::Foreign);
  NormalizerOptions opts;
  opts.foreign_pattern = "ab.*";
  CHECK(normalize_token(tok("abh"), lex, letter_table(), opts).kind == OutcomeKind::Foreign);
  opts.foreign_pattern = "(";
  CHECK_THROWS_AS(normalize_token(tok("abh"), lex, letter_table(), opts), ConfigError);
}

TEST_CASE("exact path short-circuits with score 1.0") {
  const auto lex = Lexicon::parse("abh\tx\tNN\nabc\ty\tNN\n", letter_table());
  const auto out = normalize_token(tok("abh"), lex, letter_table());
  REQUIRE(out.kind == OutcomeKind::Matched);
  CHECK(out.entry->lemma == "abh");
  CHECK(*out.match_score == 1.0);
  CHECK_FALSE(out.used_fallback);
}

TEST_CASE("fallback accepted when the stripped search is strictly closer") {
  // Full series abcdh: abh (len 3) and abce (len 4) both at distance 2; the
  // shorter abh ranks first with score 0.6. Stripping h leaves abcd, where
  // abce is at distance 1 < 2.
  const auto lex = Lexicon::parse("abce\tA\tNN\nabh\tB\tNN\n", letter_table());
  const auto out = normalize_token(tok("abcdh"), lex, letter_table());
  REQUIRE(out.kind == OutcomeKind::Matched);
  CHECK(out.entry->lemma == "abce");
  CHECK(out.used_fallback);
  CHECK(*out.best_score == doctest::Approx(0.6));
  CHECK(*out.match_score == doctest::Approx(0.75));
}

TEST_CASE("fallback rejected when the stripped search is not closer") {
  // agh vs abh: distance 1, score 2/3 <= 0.7; stem ag is at distance 2.
  const auto lex = Lexicon::parse("abh\tB\tNN\n", letter_table());
  const auto out = normalize_token(tok("agh"), lex, letter_table());
  REQUIRE(out.kind == OutcomeKind::Matched);
  CHECK(out.entry->lemma == "abh");
  CHECK_FALSE(out.used_fallback);
  CHECK(*out.match_score == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("score exactly at the threshold triggers the fallback") {
  const auto lex = Lexicon::parse("aaaaaaa\tA\tNN\n", letter_table());
  const auto out = normalize_token(tok("aaaaaaabbb"), lex, letter_table());
  REQUIRE(out.kind == OutcomeKind::Matched);
  CHECK(*out.best_score == doctest::Approx(0.7));
  CHECK(out.used_fallback);
  // Lowering the threshold below 0.7 skips it.
  NormalizerOptions opts;
  opts.threshold = ScoreThreshold::from_double(0.69);
  CHECK_FALSE(normalize_token(tok("aaaaaaabbb"), lex, letter_table(), opts).used_fallback);
}

TEST_CASE("deeper suffix stripping is opt-in") {
  const auto lex = Lexicon::parse("abc\tA\tNN\n", letter_table());
  // abcgg: distance 2 (score 0.6); one strip gives abcg at distance 1.
  const auto one = normalize_token(tok("abcgg"), lex, letter_table());
  CHECK(one.used_fallback);
  CHECK(*one.match_score == doctest::Approx(0.75));
  NormalizerOptions opts;
  opts.suffix_depth = 2;
  const auto two = normalize_token(tok("abcgg"), lex, letter_table(), opts);
  CHECK(two.used_fallback);
  CHECK(*two.match_score == 1.0);
}

TEST_CASE("no candidate sharing the first class gives Unknown") {
  const auto lex = Lexicon::parse("abh\tB\tNN\n", letter_table());
  const auto out = normalize_token(tok("hab"), lex, letter_table());
  CHECK(out.kind == OutcomeKind::Unknown);
  CHECK(out.entry == nullptr);
  CHECK_FALSE(out.match_score.has_value());
}

TEST_CASE("ties prefer the shorter series, then the lemma") {
  const auto lex = Lexicon::parse("abcd\tA\tNN\nabd\tB\tNN\nabe\tC\tNN\n", letter_table());
  // abf: abd and abe at distance 1 (len 3), abcd at distance 2.
  auto out = normalize_token(tok("abf"), lex, letter_table());
  CHECK(out.entry->lemma == "abd");
  const auto ranked = rank_candidates(U"abf", lex);
  REQUIRE(ranked.size() == 3);
  CHECK(ranked[0].variant.entry->lemma == "abd");
  CHECK(ranked[1].variant.entry->lemma == "abe");
  CHECK(ranked[2].variant.entry->lemma == "abcd");
  CHECK(rank_candidates(U"abf", lex, 2).size() == 2);
}

TEST_CASE("normalize_document keeps order and is total") {
  const auto lex = Lexicon::parse("abh\tB\tNN\n", letter_table());
  CHECK(normalize_document({}, lex, letter_table()).empty());
  const auto single = normalize_document({tok(".")}, lex, letter_table());
  REQUIRE(single.size() == 1);
  CHECK(single[0].second.kind == OutcomeKind::Punct);
}

TEST_CASE("normalizer properties on random lexicons") {
  std::mt19937 rng(20240501);
  const std::u32string letters = U"abcdefgh";
  auto random_word = [&](std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::u32string w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w += letters[rng() % 5];  // a..e
    return w;
  };
  for (int round = 0; round < 40; ++round) {
    std::string text;
    std::set<std::u32string> used;
    for (int i = 0; i < 12; ++i) {
      const auto w = random_word(1, 6);
      if (!used.insert(w).second) continue;
      text += unicode::to_utf8(w) + "\tg\tNN\n";
    }
    const auto lex = Lexicon::parse(text, letter_table());
    for (int q = 0; q < 60; ++q) {
      const std::u32string query = random_word(1, 7);
      const auto out = normalize_token(tok(unicode::to_utf8(query)), lex, letter_table());
      const auto again = normalize_token(tok(unicode::to_utf8(query)), lex, letter_table());
      CHECK(out.kind == again.kind);
      CHECK(out.entry == again.entry);
      if (used.count(query) != 0) {
        CHECK(out.kind == OutcomeKind::Matched);
        CHECK(*out.match_score == 1.0);
        CHECK_FALSE(out.used_fallback);
      }
      if (out.kind == OutcomeKind::Matched) {
        CHECK(out.entry->variant_series[out.variant].front() == query.front());
        CHECK(*out.match_score >= 0.0);
        CHECK(*out.match_score <= 1.0);
      } else {
        CHECK(out.kind == OutcomeKind::Unknown);
        CHECK(lex.candidates_by_first_class(query.front()).empty());
      }
      if (out.used_fallback) CHECK(*out.best_score <= 0.7);
    }
  }
}
