#include "doctest.h"

#include "fieldnorm/errors.hpp"
#include "fieldnorm/pipeline.hpp"
#include "test_helpers.hpp"

using namespace fieldnorm;
using fieldnorm::testing::excerpt_lexicon;
using fieldnorm::testing::starter_table;
using fieldnorm::testing::test_data;

namespace {

CorpusDocument excerpt_machine(std::vector<TagDiagnostic>* diags = nullptr) {
  return preannotate(read_file(test_data("excerpt_raw.txt")), "excerpt", excerpt_lexicon(),
                     starter_table(), {}, diags);
}

}  // namespace

TEST_CASE("excerpt transcription pre-annotates to the gold normalization") {
  std::vector<TagDiagnostic> diags;
  const auto machine = excerpt_machine(&diags);
  const auto gold = parse_document(read_file(test_data("excerpt.tsv")), "excerpt");
  CHECK(diags.empty());
  REQUIRE(machine.records.size() == gold.records.size());
  for (std::size_t i = 0; i < gold.records.size(); ++i) {
    CAPTURE(i);
    const auto& m = machine.records[i];
    const auto& g = gold.records[i];
    CHECK(m.original == g.original);
    CHECK(m.normalized == g.normalized);
    CHECK(m.gloss == g.gloss);
    CHECK(m.pos == g.pos);
  }
}

TEST_CASE("excerpt certainties follow the match scores") {
  const auto machine = excerpt_machine();
  const auto cert = [&](std::string_view original) {
    for (const auto& r : machine.records) {
      if (r.original == original) return r.certainty;
    }
    FAIL("missing " << original);
    return 0.0;
  };
  CHECK(cert("mak") == 100.0);
  CHECK(cert("hi'") == 100.0);
  CHECK(cert("jētr'aw") == 100.0);
  CHECK(cert("mi'n") == 75.0);     // 4 vs 5 symbols, one insertion
  CHECK(cert("phañi") == 75.0);
  CHECK(cert(",") == 100.0);
  for (const auto& r : machine.records) {
    if (!r.is_continuation()) CHECK(r.certainty > 0.0);
  }
}

TEST_CASE("machine output is valid and round-trips") {
  const auto machine = excerpt_machine();
  const std::string text = write_document(machine);
  CHECK(validate_text(text).empty());
  CHECK(parse_document(text, "excerpt") == machine);
  CHECK(write_document(excerpt_machine()) == text);
}

TEST_CASE("special records") {
  const auto doc = preannotate("zzz9 . hq", "s", excerpt_lexicon(), starter_table());
  REQUIRE(doc.records.size() == 3);
  CHECK(doc.records[0].normalized == "[foreign]");
  CHECK(doc.records[0].gloss == "[foreign]");
  CHECK(doc.records[0].pos == PosTag::FW);
  CHECK(doc.records[1].normalized == ".");
  CHECK(doc.records[1].gloss == "[punc]");
  CHECK(doc.records[1].pos == PosTag::PU);
  // No lemma starts with the h class except hi'; "hq" still matches it.
  CHECK(doc.records[2].normalized == "hi'");

  const auto unknown = preannotate("uuu", "u", excerpt_lexicon(), starter_table());
  REQUIRE(unknown.records.size() == 1);
  CHECK(unknown.records[0].normalized == "[unknown]");
  CHECK(unknown.records[0].pos == PosTag::UN);
  CHECK(unknown.records[0].certainty == 100.0);
}

TEST_CASE("split markers survive pre-annotation") {
  const auto doc = preannotate("mak#hi'", "s", excerpt_lexicon(), starter_table());
  REQUIRE(doc.records.size() == 2);
  CHECK(doc.records[0].original == "mak#");
  CHECK(doc.records[0].normalized == "mak'");
  CHECK(doc.records[1].original == "hi'");
  CHECK(validate_text(write_document(doc)).empty());
}

TEST_CASE("empty transcription gives an empty document") {
  const auto doc = preannotate("  \n", "e", excerpt_lexicon(), starter_table());
  CHECK(doc.records.empty());
  CHECK(write_document(doc).empty());
}

TEST_CASE("homograph conflicts surface as diagnostics") {
  const auto lex = Lexicon::parse("traw\t'that'\tDT\ntraw\t'if'\tCC\n", starter_table());
  std::vector<TagDiagnostic> diags;
  const auto doc = preannotate("traw", "c", lex, starter_table(), {}, &diags);
  REQUIRE(doc.records.size() == 1);
  CHECK(doc.records[0].pos == PosTag::UN);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].reason == TagDiagnostic::Reason::Conflict);
  CHECK(diags[0].document == "c");
  CHECK(diags[0].line == 1);
}

TEST_CASE("malformed transcription is a parse error") {
  CHECK_THROWS_AS(preannotate("mak&", "m", excerpt_lexicon(), starter_table()), ParseError);
}
