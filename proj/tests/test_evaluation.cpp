#include <random>

#include "doctest.h"

#include "fieldnorm/evaluation.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace fieldnorm;

namespace {

Tokens toks(std::initializer_list<const char*> words) {
  Tokens out;
  for (const char* w : words) out.emplace_back(w);
  return out;
}

AlignedRecord word(std::string norm) {
  AlignedRecord r;
  r.original = norm;
  r.normalized = std::move(norm);
  r.gloss = "'g'";
  r.pos = PosTag::NN;
  return r;
}

CorpusDocument doc_of(const Tokens& tokens) {
  CorpusDocument d{"d", {}, ""};
  for (const auto& t : tokens) d.records.push_back(word(t));
  return d;
}

}  // namespace

TEST_CASE("NED examples") {
  CHECK(normalized_edit_distance(Tokens{}, Tokens{}) == 0.0);
  CHECK(normalized_edit_distance(toks({"a"}), Tokens{}) == 1.0);
  CHECK(normalized_edit_distance(toks({"a"}), toks({"b"})) == 1.0);
  CHECK(normalized_edit_distance(toks({"a", "b"}), toks({"a", "c"})) == 0.5);
  CHECK(normalized_edit_distance(toks({"a", "b", "c"}), toks({"a", "b", "c"})) == 0.0);
}

TEST_CASE("NED can prefer a longer path to the Levenshtein alignment") {
  // abab vs baba: four substitutions give 4/4; one deletion and one insertion
  // around three matches give 2/5.
  const Tokens a = toks({"a", "b", "a", "b"});
  const Tokens b = toks({"b", "a", "b", "a"});
  const auto [w, len] = oracle::ned_fraction(a, b);
  CHECK(static_cast<double>(w) / static_cast<double>(len) == doctest::Approx(0.4));
  CHECK(normalized_edit_distance(a, b) == doctest::Approx(0.4));
}

TEST_CASE("NED matches path enumeration on all pairs up to length 3") {
  const auto seqs = oracle::all_sequences<Tokens>({"a", "b", "c"}, 3);
  std::size_t mismatches = 0;
  for (const auto& x : seqs) {
    for (const auto& y : seqs) {
      const double got = normalized_edit_distance(x, y);
      if (got != oracle::ned(x, y)) ++mismatches;
      if (got != normalized_edit_distance(y, x)) ++mismatches;
      if ((got == 0.0) != (x == y)) ++mismatches;
      if (got < 0.0 || got > 1.0) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("NED handles long documents") {
  Tokens a;
  Tokens b;
  std::mt19937 rng(3);
  for (int i = 0; i < 600; ++i) {
    a.push_back(std::to_string(rng() % 50));
    b.push_back(rng() % 5 == 0 ? "x" : a.back());
  }
  const double d = normalized_edit_distance(a, b);
  CHECK(d > 0.0);
  CHECK(d < 0.5);
}

TEST_CASE("mean WER") {
  const std::vector<Tokens> hyp{toks({"a", "b"}), toks({"a"})};
  const std::vector<Tokens> ref{toks({"a", "c"}), toks({"a"})};
  CHECK(mean_wer(hyp, ref) == doctest::Approx(0.25));
  CHECK(mean_wer(std::span(hyp).first(1), std::span(ref).first(1)) == 0.5);
  CHECK_THROWS_AS(mean_wer({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(mean_wer(hyp, std::span(ref).first(1)), std::invalid_argument);
}

TEST_CASE("BLEU hand-computed example") {
  // Unigrams: a b d of a b c d match (3/4). Bigrams: only "a b" of three (1/3).
  const std::vector<Tokens> hyp{toks({"a", "b", "c", "d"})};
  const std::vector<Tokens> ref{toks({"a", "b", "x", "d"})};
  const auto s = bleu(hyp, ref);
  CHECK(s[0] == doctest::Approx(0.75));
  CHECK(s[1] == doctest::Approx(0.5));
  CHECK(s[2] == 0.0);
  CHECK(s[3] == 0.0);
}

TEST_CASE("BLEU identities") {
  const std::vector<Tokens> gold{toks({"a", "b", "c", "d", "e"}), toks({"q", "r", "s", "t"})};
  const auto same = bleu(gold, gold);
  for (double v : same) CHECK(v == 1.0);
  const std::vector<Tokens> disjoint{toks({"x", "y", "z", "w", "v"}), toks({"k", "l", "m", "n"})};
  CHECK(bleu(disjoint, gold)[0] == 0.0);
  const std::vector<Tokens> empty_hyp{Tokens{}, Tokens{}};
  CHECK(bleu(empty_hyp, gold)[0] == 0.0);
  CHECK_THROWS_AS(bleu({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(bleu(gold, std::span(gold).first(1)), std::invalid_argument);
}

TEST_CASE("BLEU clips repeated unigrams and applies the brevity penalty") {
  const std::vector<Tokens> hyp{toks({"the", "the", "the"})};
  const std::vector<Tokens> ref{toks({"the", "cat", "the", "mat"})};
  // Clipped 2/3, brevity exp(1 - 4/3).
  CHECK(bleu(hyp, ref, 1)[0] == doctest::Approx(2.0 / 3.0 * std::exp(1.0 - 4.0 / 3.0)));
}

TEST_CASE("BLEU agrees with the definition on random corpora") {
  std::mt19937 rng(11);
  const char* vocab[] = {"a", "b", "c", "d"};
  for (int round = 0; round < 300; ++round) {
    std::vector<Tokens> hyp;
    std::vector<Tokens> ref;
    const int docs = 1 + static_cast<int>(rng() % 3);
    for (int d = 0; d < docs; ++d) {
      Tokens h;
      Tokens r;
      const int hn = static_cast<int>(rng() % 9);
      const int rn = 1 + static_cast<int>(rng() % 9);
      for (int i = 0; i < hn; ++i) h.emplace_back(vocab[rng() % 4]);
      for (int i = 0; i < rn; ++i) r.emplace_back(vocab[rng() % 4]);
      hyp.push_back(h);
      ref.push_back(r);
    }
    const auto got = bleu(hyp, ref);
    for (std::size_t n = 1; n <= kMaxBleuOrder; ++n) {
      CHECK(got[n - 1] == doctest::Approx(oracle::bleu(hyp, ref, n)).epsilon(1e-12));
    }
    // Identical corpora score 1 at every order they can fill.
    for (double v : bleu(ref, ref, 1)) CHECK(v == 1.0);
  }
}

TEST_CASE("evaluate and format_report") {
  const Tokens t = toks({"mi'in", "mak'", "shroxo", ","});
  const std::vector<CorpusDocument> gold{doc_of(t)};
  const auto report = evaluate(gold, gold);
  CHECK(report.wer == 0.0);
  for (double v : report.bleu) CHECK(v == 1.0);
  CHECK(report.documents == 1);
  CHECK(report.hypothesis_tokens == 4);
  const std::string text = format_report(report);
  CHECK(text ==
        "Metric\tPerformance\tDocument mean\n"
        "WER\t0.0000\t0.0000\n"
        "BLEU-1\t1.0000\t1.0000\n"
        "BLEU-2\t1.0000\t1.0000\n"
        "BLEU-3\t1.0000\t1.0000\n"
        "BLEU-4\t1.0000\t1.0000\n");
}

TEST_CASE("evaluate ignores continuation lines") {
  CorpusDocument hyp = doc_of(toks({"a", "b"}));
  CorpusDocument ref = doc_of(toks({"a", "b"}));
  AlignedRecord cont;
  cont.original = "x&";
  ref.records.insert(ref.records.begin() + 1, cont);
  const std::vector<CorpusDocument> h{hyp};
  const std::vector<CorpusDocument> r{ref};
  CHECK(evaluate(h, r).wer == 0.0);
}
