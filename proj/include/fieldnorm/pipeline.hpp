#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/lexicon.hpp"
#include "fieldnorm/normalizer.hpp"
#include "fieldnorm/symbols.hpp"
#include "fieldnorm/tagger.hpp"

namespace fieldnorm {

// Corpus record for one normalized token. Matched tokens carry the matched
// form, its gloss, the match score as certainty, and the lemma's tag after
// conflict resolution; the other kinds carry their special markers at 100.0%.
AlignedRecord make_record(const TranscriptToken& token,
                          const NormalizationOutcome& outcome, const Lexicon& lexicon,
                          TagDiagnostic* diagnostic = nullptr);

// Machine pre-annotation of a whole transcription: tokenize, normalize, tag.
// `&` fragments become continuation lines ahead of their host record.
CorpusDocument preannotate(std::string_view transcription, std::string id,
                           const Lexicon& lexicon, const SymbolClassTable& table,
                           const NormalizerOptions& options = {},
                           std::vector<TagDiagnostic>* diagnostics = nullptr);

}  // namespace fieldnorm
