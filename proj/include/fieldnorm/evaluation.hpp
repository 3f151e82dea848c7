#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fieldnorm/corpus.hpp"

namespace fieldnorm {

using Tokens = std::vector<std::string>;

// Marzal–Vidal normalized edit distance with unit weights: the minimum over
// all edit paths of (path weight / path length), where matches are length-1
// steps of weight 0. Zero for two empty sequences.
double normalized_edit_distance(std::span<const std::string> a,
                                std::span<const std::string> b);

// Mean per-pair NED. Throws std::invalid_argument on empty or mismatched input.
double mean_wer(std::span<const Tokens> hypotheses, std::span<const Tokens> references);

inline constexpr std::size_t kMaxBleuOrder = 4;

// BLEU-1..BLEU-max_n; index 0 holds BLEU-1.
using BleuScores = std::vector<double>;

// Corpus-level BLEU with clipped n-gram precision, no smoothing and a single
// reference per hypothesis. Throws std::invalid_argument on empty or
// mismatched input.
BleuScores bleu(std::span<const Tokens> hypotheses, std::span<const Tokens> references,
                std::size_t max_n = kMaxBleuOrder);

struct EvalReport {
  double wer = 0.0;
  BleuScores bleu;           // corpus level
  BleuScores bleu_doc_mean;  // mean of per-document BLEU
  std::size_t hypothesis_tokens = 0;
  std::size_t reference_tokens = 0;
  std::size_t documents = 0;
};

// Compares the normalized field of logical words, document by document.
EvalReport evaluate(std::span<const CorpusDocument> hypotheses,
                    std::span<const CorpusDocument> references);

// Table with rows WER, BLEU-1..BLEU-4 at four decimals.
std::string format_report(const EvalReport& report);

}  // namespace fieldnorm
