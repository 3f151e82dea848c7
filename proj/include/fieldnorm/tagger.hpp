#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/lexicon.hpp"
#include "fieldnorm/normalizer.hpp"
#include "fieldnorm/pos_tag.hpp"

namespace fieldnorm {

// Matched → entry tag; Punct → PU; Foreign → FW; Unknown → UN.
PosTag tag(const NormalizationOutcome& outcome);

// Record left for the human reviewer when lookup cannot settle a tag.
struct TagDiagnostic {
  enum class Reason { Conflict, NotInLexicon };

  Reason reason = Reason::Conflict;
  std::string form;
  std::vector<PosTag> tags;  // distinct tags seen, in lexicon order
  std::string document;
  std::size_t line = 0;  // 1-based record line, 0 if not tied to a file

  // Single-line JSON object.
  std::string to_json_line() const;
};

struct TagResolution {
  PosTag tag = PosTag::UN;
  std::optional<TagDiagnostic> diagnostic;
};

// Homographs with different tags resolve to the entry marked as the
// originating class; without exactly one such tag the result is UN plus a
// diagnostic. `entries` must be non-empty.
TagResolution resolve_conflict(std::span<const LexiconEntry* const> entries);

// Tag for a normalized form by lexicon lookup, specials handled first.
TagResolution tag_normalized(const AlignedRecord& record, const Lexicon& lexicon);

// Fills in the POS column of every annotated record by lemma lookup.
// Diagnostics (if requested) get the document id and line filled in.
void retag_document(CorpusDocument& doc, const Lexicon& lexicon,
                    std::vector<TagDiagnostic>* diagnostics = nullptr);

}  // namespace fieldnorm
