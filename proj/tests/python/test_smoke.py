import os
from pathlib import Path

import pytest

import fieldnorm

TEST_DATA = Path(os.environ.get("FIELDNORM_TEST_DATA", Path(__file__).parents[1] / "data"))
DATA = Path(os.environ.get("FIELDNORM_DATA", Path(__file__).parents[2] / "data"))


@pytest.fixture(scope="module")
def table():
    return fieldnorm.SymbolClassTable.load(str(DATA / "symbols.tsv"))


@pytest.fixture(scope="module")
def lexicon(table):
    return fieldnorm.Lexicon.load(str(TEST_DATA / "excerpt_lexicon.tsv"), table)


def test_symbol_series(table):
    assert fieldnorm.symbol_series("tr`aw", table) == fieldnorm.symbol_series("traw", table)
    assert fieldnorm.symbol_series("zz9", table) is None


def test_levenshtein_and_score():
    assert fieldnorm.levenshtein("kitten", "sitting") == 3
    assert fieldnorm.convert_score(2, 4, 4) == 0.5
    with pytest.raises(ValueError):
        fieldnorm.convert_score(0, 0, 0)


def test_normalize_token(table, lexicon):
    exact = fieldnorm.normalize_token("mak", lexicon, table)
    assert exact.kind == "matched"
    assert exact.form == "mak'"
    assert exact.match_score == 1.0
    assert fieldnorm.normalize_token(",", lexicon, table).kind == "punct"
    assert fieldnorm.normalize_token("zz9", lexicon, table).pos == "FW"
    fallback = fieldnorm.normalize_token("ʃóqen", lexicon, table)
    assert fallback.lemma == "shroxo"
    assert fallback.used_fallback


def test_preannotate_excerpt(table, lexicon):
    raw = (TEST_DATA / "excerpt_raw.txt").read_text(encoding="utf-8")
    text = fieldnorm.preannotate(raw, "excerpt", lexicon, table)
    assert fieldnorm.validate_text(text) == []
    machine = fieldnorm.parse_document(text, "excerpt")
    gold = fieldnorm.parse_document((TEST_DATA / "excerpt.tsv").read_text(encoding="utf-8"), "excerpt")
    assert machine.normalized_tokens() == gold.normalized_tokens()
    report = fieldnorm.evaluate([machine], [gold])
    assert report["wer"] == 0.0
    assert report["bleu"] == [1.0, 1.0, 1.0, 1.0]
    assert fieldnorm.format_report([machine], [gold]).splitlines()[1].startswith("WER\t0.0000")


def test_corpus_round_trip_and_stats():
    text = (TEST_DATA / "excerpt.tsv").read_text(encoding="utf-8")
    doc = fieldnorm.parse_document(text, "excerpt")
    assert len(doc.records) == 16
    assert doc.logical_words()[12] == "ts'umóno"
    assert fieldnorm.write_document(doc) == text
    stats = fieldnorm.compute_stats([doc])
    assert stats["total_words"] == 15
    assert stats["unique_words"] == 14
    assert sum(stats["tag_histogram"].values()) == 15


def test_errors_are_value_errors():
    with pytest.raises(fieldnorm.ParseError):
        fieldnorm.parse_document("a\tb\n", "x")
    with pytest.raises(ValueError):
        fieldnorm.SymbolClassTable.parse("")
    violations = fieldnorm.validate_text("a\tb\tc\t1%\tNN\n")
    assert violations[0][0] == 1


def test_metrics():
    assert fieldnorm.normalized_edit_distance(["a", "b"], ["a", "c"]) == 0.5
    scores = fieldnorm.bleu([["a", "b", "c", "d"]], [["a", "b", "x", "d"]])
    assert scores[0] == pytest.approx(0.75)
    assert scores[1] == pytest.approx(0.5)
    assert fieldnorm.mean_wer([["a"]], [["a"]]) == 0.0
