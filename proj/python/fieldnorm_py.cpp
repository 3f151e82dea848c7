#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/errors.hpp"
#include "fieldnorm/evaluation.hpp"
#include "fieldnorm/lexicon.hpp"
#include "fieldnorm/normalizer.hpp"
#include "fieldnorm/pipeline.hpp"
#include "fieldnorm/symbols.hpp"

namespace py = pybind11;
using namespace fieldnorm;

namespace {

struct Outcome {
  std::string kind;
  std::optional<std::string> lemma;
  std::optional<std::string> form;
  std::optional<std::string> gloss;
  std::string pos;
  std::optional<double> match_score;
  bool used_fallback = false;
};

NormalizerOptions make_options(double threshold, const std::string& suffix_policy,
                               std::size_t suffix_depth,
                               const std::optional<std::string>& foreign_pattern) {
  NormalizerOptions options;
  options.threshold = ScoreThreshold::from_double(threshold);
  options.suffix_policy = SuffixPolicy::parse(suffix_policy);
  options.suffix_depth = suffix_depth;
  options.foreign_pattern = foreign_pattern;
  return options;
}

std::string pos_name(const std::optional<PosTag>& tag) {
  return tag ? std::string(to_string(*tag)) : std::string();
}

std::vector<LexiconEntry> copy_entries(const std::vector<const LexiconEntry*>& entries) {
  std::vector<LexiconEntry> out;
  for (const LexiconEntry* e : entries) out.push_back(*e);
  return out;
}

}  // namespace

PYBIND11_MODULE(_fieldnorm, m) {
  m.doc() = "Symbol-class Levenshtein pre-annotation, corpus I/O and evaluation";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SerializationError>(m, "SerializationError", PyExc_ValueError);

  py::class_<SymbolClassTable>(m, "SymbolClassTable")
      .def_static("parse", &SymbolClassTable::parse, py::arg("text"))
      .def_static("load", [](const std::string& path) { return SymbolClassTable::load(path); })
      .def_property_readonly("version", &SymbolClassTable::version)
      .def("__len__", [](const SymbolClassTable& t) { return t.entries().size(); })
      .def("to_text", &SymbolClassTable::to_text);

  m.def(
      "symbol_series",
      [](const std::string& word, const SymbolClassTable& table) -> std::optional<std::u32string> {
        auto s = symbol_series(word, table);
        if (!s) return std::nullopt;
        return s->symbols;
      },
      py::arg("word"), py::arg("table"),
      "Symbol series of a word, or None when it is not reducible.");

  py::class_<LexiconEntry>(m, "LexiconEntry")
      .def_readonly("lemma", &LexiconEntry::lemma)
      .def_readonly("gloss", &LexiconEntry::gloss)
      .def_property_readonly("pos", [](const LexiconEntry& e) { return std::string(to_string(e.pos)); })
      .def_readonly("variant_forms", &LexiconEntry::variant_forms)
      .def_readonly("origin", &LexiconEntry::origin);

  py::class_<Lexicon>(m, "Lexicon")
      .def_static("parse", &Lexicon::parse, py::arg("text"), py::arg("table"))
      .def_static("load", [](const std::string& path, const SymbolClassTable& table) {
        return Lexicon::load(path, table);
      })
      .def("__len__", &Lexicon::size)
      .def("exact_lookup", [](const Lexicon& lex, const std::u32string& series) {
        return copy_entries(lex.exact_lookup(series));
      })
      .def("candidates_by_first_class", [](const Lexicon& lex, const std::u32string& symbol) {
        if (symbol.size() != 1) throw py::value_error("expected a single class symbol");
        return copy_entries(lex.candidates_by_first_class(symbol[0]));
      })
      .def("serialize", &Lexicon::serialize);

  m.def("levenshtein", [](const std::u32string& a, const std::u32string& b) {
    return levenshtein(a, b);
  });
  m.def("convert_score", &convert_score, py::arg("distance"), py::arg("query_len"),
        py::arg("candidate_len"));

  py::class_<Outcome>(m, "Outcome")
      .def_readonly("kind", &Outcome::kind)
      .def_readonly("lemma", &Outcome::lemma)
      .def_readonly("form", &Outcome::form)
      .def_readonly("gloss", &Outcome::gloss)
      .def_readonly("pos", &Outcome::pos)
      .def_readonly("match_score", &Outcome::match_score)
      .def_readonly("used_fallback", &Outcome::used_fallback);

  m.def(
      "normalize_token",
      [](const std::string& raw, const Lexicon& lexicon, const SymbolClassTable& table,
         double threshold, const std::string& suffix_policy, std::size_t suffix_depth,
         const std::optional<std::string>& foreign_pattern) {
        TranscriptToken token{raw, 0, {}, false};
        const auto r = normalize_token(
            token, lexicon, table,
            make_options(threshold, suffix_policy, suffix_depth, foreign_pattern));
        Outcome out;
        out.kind = std::string(to_string(r.kind));
        out.pos = std::string(to_string(tag(r)));
        out.match_score = r.match_score;
        out.used_fallback = r.used_fallback;
        if (r.entry != nullptr) {
          out.lemma = r.entry->lemma;
          out.form = r.entry->variant_forms[r.variant];
          out.gloss = r.entry->gloss;
        }
        return out;
      },
      py::arg("raw"), py::arg("lexicon"), py::arg("table"), py::arg("threshold") = 0.7,
      py::arg("suffix_policy") = "*", py::arg("suffix_depth") = 1,
      py::arg("foreign_pattern") = py::none());

  m.def(
      "preannotate",
      [](const std::string& text, const std::string& id, const Lexicon& lexicon,
         const SymbolClassTable& table, double threshold, const std::string& suffix_policy,
         std::size_t suffix_depth) {
        return write_document(preannotate(
            text, id, lexicon, table,
            make_options(threshold, suffix_policy, suffix_depth, std::nullopt)));
      },
      py::arg("text"), py::arg("id"), py::arg("lexicon"), py::arg("table"),
      py::arg("threshold") = 0.7, py::arg("suffix_policy") = "*", py::arg("suffix_depth") = 1,
      "Pre-annotated corpus file content for a transcription.");

  py::class_<AlignedRecord>(m, "AlignedRecord")
      .def_readonly("original", &AlignedRecord::original)
      .def_readonly("normalized", &AlignedRecord::normalized)
      .def_readonly("gloss", &AlignedRecord::gloss)
      .def_readonly("certainty", &AlignedRecord::certainty)
      .def_property_readonly("pos", [](const AlignedRecord& r) { return pos_name(r.pos); })
      .def_property_readonly("is_continuation", &AlignedRecord::is_continuation);

  py::class_<CorpusDocument>(m, "CorpusDocument")
      .def_readonly("id", &CorpusDocument::id)
      .def_readonly("records", &CorpusDocument::records)
      .def("logical_words", [](const CorpusDocument& d) {
        std::vector<std::string> out;
        for (const LogicalWord& w : logical_words(d)) out.push_back(w.original);
        return out;
      })
      .def("normalized_tokens", [](const CorpusDocument& d) { return normalized_tokens(d); });

  m.def(
      "parse_document",
      [](const std::string& text, const std::string& id, bool legacy) {
        ParseOptions options;
        options.allow_legacy = legacy;
        return parse_document(text, id, options);
      },
      py::arg("text"), py::arg("id") = "", py::arg("legacy") = false);
  m.def("write_document", &write_document);
  m.def(
      "validate_text",
      [](const std::string& text, bool legacy) {
        ParseOptions options;
        options.allow_legacy = legacy;
        std::vector<std::pair<std::size_t, std::string>> out;
        for (const Violation& v : validate_text(text, options)) out.emplace_back(v.line, v.message);
        return out;
      },
      py::arg("text"), py::arg("legacy") = false);

  m.def("compute_stats", [](const std::vector<CorpusDocument>& docs) {
    const CorpusStats s = compute_stats(docs);
    py::dict d;
    d["documents"] = s.documents;
    d["total_chars"] = s.total_chars;
    d["total_words"] = s.total_words;
    d["unique_words"] = s.unique_words;
    d["sentences"] = s.sentences;
    d["mean_chars_per_text"] = s.mean_chars_per_text;
    d["mean_words_per_text"] = s.mean_words_per_text;
    d["mean_unique_words_per_text"] = s.mean_unique_words_per_text;
    d["mean_sentences_per_text"] = s.mean_sentences_per_text;
    py::dict hist;
    for (const auto& [tag, n] : s.tag_histogram) hist[py::str(std::string(to_string(tag)))] = n;
    d["tag_histogram"] = hist;
    return d;
  });
  m.def("format_stats", [](const std::vector<CorpusDocument>& docs) {
    return format_stats(compute_stats(docs));
  });

  m.def("normalized_edit_distance",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
          return normalized_edit_distance(a, b);
        });
  m.def("mean_wer", [](const std::vector<Tokens>& hyp, const std::vector<Tokens>& ref) {
    return mean_wer(hyp, ref);
  });
  m.def(
      "bleu",
      [](const std::vector<Tokens>& hyp, const std::vector<Tokens>& ref, std::size_t max_n) {
        return bleu(hyp, ref, max_n);
      },
      py::arg("hypotheses"), py::arg("references"), py::arg("max_n") = kMaxBleuOrder);
  m.def("evaluate", [](const std::vector<CorpusDocument>& hyp,
                       const std::vector<CorpusDocument>& gold) {
    const EvalReport r = evaluate(hyp, gold);
    py::dict d;
    d["wer"] = r.wer;
    d["bleu"] = r.bleu;
    d["bleu_doc_mean"] = r.bleu_doc_mean;
    d["hypothesis_tokens"] = r.hypothesis_tokens;
    d["reference_tokens"] = r.reference_tokens;
    return d;
  });
  m.def("format_report", [](const std::vector<CorpusDocument>& hyp,
                            const std::vector<CorpusDocument>& gold) {
    return format_report(evaluate(hyp, gold));
  });
}
