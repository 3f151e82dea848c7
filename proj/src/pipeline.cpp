#include "fieldnorm/pipeline.hpp"

#include <algorithm>

#include "fieldnorm/unicode.hpp"

namespace fieldnorm {

AlignedRecord make_record(const TranscriptToken& token,
                          const NormalizationOutcome& outcome, const Lexicon& lexicon,
                          TagDiagnostic* diagnostic) {
  AlignedRecord rec;
  rec.original = token.joined_from.empty() ? token.raw : token.joined_from.back();
  if (token.split_after) rec.original += '#';
  rec.certainty = 100.0;
  rec.pos = tag(outcome);
  switch (outcome.kind) {
    case OutcomeKind::Punct:
      rec.normalized = unicode::nfc(token.raw);
      rec.gloss = std::string(kPuncMarker);
      break;
    case OutcomeKind::Foreign:
      rec.normalized = std::string(kForeignMarker);
      rec.gloss = std::string(kForeignMarker);
      break;
    case OutcomeKind::Unknown:
      rec.normalized = std::string(kUnknownMarker);
      rec.gloss = std::string(kUnknownMarker);
      break;
    case OutcomeKind::Matched: {
      const LexiconEntry& entry = *outcome.entry;
      rec.normalized = entry.variant_forms[outcome.variant];
      rec.gloss = entry.gloss;
      // Certainty must stay above zero; a zero score shows as 0.1%.
      rec.certainty =
          static_cast<double>(std::max<std::int64_t>(1, outcome.score->tenths_percent())) /
          10.0;
      TagResolution res = resolve_conflict(lexicon.by_lemma(entry.lemma));
      rec.pos = res.tag;
      if (res.diagnostic && diagnostic != nullptr) *diagnostic = std::move(*res.diagnostic);
      break;
    }
  }
  return rec;
}

CorpusDocument preannotate(std::string_view transcription, std::string id,
                           const Lexicon& lexicon, const SymbolClassTable& table,
                           const NormalizerOptions& options,
                           std::vector<TagDiagnostic>* diagnostics) {
  CorpusDocument doc;
  doc.id = std::move(id);
  const auto tokens = tokenize_transcription(transcription);
  for (const auto& [token, outcome] : normalize_document(tokens, lexicon, table, options)) {
    for (std::size_t f = 0; f + 1 < token.joined_from.size(); ++f) {
      AlignedRecord cont;
      cont.original = token.joined_from[f] + "&";
      doc.records.push_back(std::move(cont));
    }
    TagDiagnostic diag;
    diag.line = 0;
    AlignedRecord rec = make_record(token, outcome, lexicon, &diag);
    if (!diag.form.empty() && diagnostics != nullptr) {
      diag.document = doc.id;
      diag.line = doc.records.size() + 1;
      diagnostics->push_back(std::move(diag));
    }
    doc.records.push_back(std::move(rec));
  }
  return doc;
}

}  // namespace fieldnorm
