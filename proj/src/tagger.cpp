#include "fieldnorm/tagger.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace fieldnorm {

PosTag tag(const NormalizationOutcome& outcome) {
  switch (outcome.kind) {
    case OutcomeKind::Matched:
      return outcome.entry != nullptr ? outcome.entry->pos : PosTag::UN;
    case OutcomeKind::Punct: return PosTag::PU;
    case OutcomeKind::Foreign: return PosTag::FW;
    case OutcomeKind::Unknown: return PosTag::UN;
  }
  return PosTag::UN;
}

std::string TagDiagnostic::to_json_line() const {
  nlohmann::json j;
  j["type"] = "pos";
  j["reason"] = reason == Reason::Conflict ? "conflict" : "not_in_lexicon";
  j["form"] = form;
  auto& arr = j["tags"] = nlohmann::json::array();
  for (PosTag t : tags) arr.push_back(std::string(to_string(t)));
  j["document"] = document;
  j["line"] = line;
  return j.dump();
}

TagResolution resolve_conflict(std::span<const LexiconEntry* const> entries) {
  if (entries.empty()) {
    throw std::invalid_argument("resolve_conflict needs at least one entry");
  }
  std::vector<PosTag> tags;
  std::vector<PosTag> origin_tags;
  for (const LexiconEntry* e : entries) {
    if (std::find(tags.begin(), tags.end(), e->pos) == tags.end()) tags.push_back(e->pos);
    if (e->origin && std::find(origin_tags.begin(), origin_tags.end(), e->pos) ==
                         origin_tags.end()) {
      origin_tags.push_back(e->pos);
    }
  }
  if (tags.size() == 1) return {tags.front(), std::nullopt};
  if (origin_tags.size() == 1) return {origin_tags.front(), std::nullopt};

  TagDiagnostic diag;
  diag.reason = TagDiagnostic::Reason::Conflict;
  diag.form = entries.front()->lemma;
  diag.tags = std::move(tags);
  return {PosTag::UN, std::move(diag)};
}

TagResolution tag_normalized(const AlignedRecord& record, const Lexicon& lexicon) {
  if (record.gloss == kPuncMarker || record.normalized == kPuncMarker) {
    return {PosTag::PU, std::nullopt};
  }
  if (record.normalized == kForeignMarker) return {PosTag::FW, std::nullopt};
  if (record.normalized == kUnknownMarker) return {PosTag::UN, std::nullopt};

  auto entries = lexicon.by_lemma(record.normalized);
  if (entries.empty()) entries = lexicon.by_form(record.normalized);
  if (entries.empty()) {
    TagDiagnostic diag;
    diag.reason = TagDiagnostic::Reason::NotInLexicon;
    diag.form = record.normalized;
    return {PosTag::UN, std::move(diag)};
  }
  return resolve_conflict(entries);
}

void retag_document(CorpusDocument& doc, const Lexicon& lexicon,
                    std::vector<TagDiagnostic>* diagnostics) {
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    AlignedRecord& rec = doc.records[i];
    if (rec.is_continuation()) {
      rec.pos.reset();
      continue;
    }
    TagResolution res = tag_normalized(rec, lexicon);
    rec.pos = res.tag;
    if (res.diagnostic && diagnostics != nullptr) {
      res.diagnostic->document = doc.id;
      res.diagnostic->line = i + 1;
      diagnostics->push_back(std::move(*res.diagnostic));
    }
  }
}

}  // namespace fieldnorm
