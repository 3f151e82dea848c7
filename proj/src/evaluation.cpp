#include "fieldnorm/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

namespace fieldnorm {

double normalized_edit_distance(std::span<const std::string> a,
                                std::span<const std::string> b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0 && n == 0) return 0.0;

  // layer[i][j]: least weight of a path of the current length reaching (i, j).
  // A path of L steps reaches (i, j) iff max(i, j) <= L <= i + j, so cells
  // outside that band are never read.
  const std::size_t width = n + 1;
  std::vector<std::size_t> prev((m + 1) * width, 0);
  std::vector<std::size_t> cur((m + 1) * width, 0);
  const auto reachable = [](std::size_t i, std::size_t j, std::size_t len) {
    return std::max(i, j) <= len && len <= i + j;
  };

  std::size_t best_weight = 0;
  std::size_t best_length = 0;
  for (std::size_t len = 1; len <= m + n; ++len) {
    for (std::size_t i = 0; i <= std::min(m, len); ++i) {
      const std::size_t j_lo = len > i ? len - i : 0;
      const std::size_t j_hi = std::min(n, len);
      for (std::size_t j = j_lo; j <= j_hi; ++j) {
        std::size_t w = std::numeric_limits<std::size_t>::max();
        if (i > 0 && reachable(i - 1, j, len - 1)) {
          w = std::min(w, prev[(i - 1) * width + j] + 1);
        }
        if (j > 0 && reachable(i, j - 1, len - 1)) {
          w = std::min(w, prev[i * width + j - 1] + 1);
        }
        if (i > 0 && j > 0 && reachable(i - 1, j - 1, len - 1)) {
          const std::size_t step = a[i - 1] == b[j - 1] ? 0 : 1;
          w = std::min(w, prev[(i - 1) * width + j - 1] + step);
        }
        cur[i * width + j] = w;
      }
    }
    if (reachable(m, n, len)) {
      const std::size_t w = cur[m * width + n];
      if (best_length == 0 || w * best_length < best_weight * len) {
        best_weight = w;
        best_length = len;
      }
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(best_weight) / static_cast<double>(best_length);
}

double mean_wer(std::span<const Tokens> hypotheses, std::span<const Tokens> references) {
  if (hypotheses.empty()) throw std::invalid_argument("no document pairs to score");
  if (hypotheses.size() != references.size()) {
    throw std::invalid_argument("hypothesis and reference document counts differ");
  }
  double sum = 0.0;
  for (std::size_t d = 0; d < hypotheses.size(); ++d) {
    sum += normalized_edit_distance(hypotheses[d], references[d]);
  }
  return sum / static_cast<double>(hypotheses.size());
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts count_ngrams(const Tokens& tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

}  // namespace

BleuScores bleu(std::span<const Tokens> hypotheses, std::span<const Tokens> references,
                std::size_t max_n) {
  if (hypotheses.empty()) throw std::invalid_argument("empty corpus");
  if (hypotheses.size() != references.size()) {
    throw std::invalid_argument("hypothesis and reference document counts differ");
  }
  if (max_n == 0) throw std::invalid_argument("BLEU order must be positive");

  std::vector<std::size_t> matches(max_n, 0);
  std::vector<std::size_t> totals(max_n, 0);
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
  for (std::size_t d = 0; d < hypotheses.size(); ++d) {
    hyp_len += hypotheses[d].size();
    ref_len += references[d].size();
    for (std::size_t n = 1; n <= max_n; ++n) {
      const NgramCounts hyp = count_ngrams(hypotheses[d], n);
      const NgramCounts ref = count_ngrams(references[d], n);
      for (const auto& [gram, count] : hyp) {
        totals[n - 1] += count;
        if (const auto it = ref.find(gram); it != ref.end()) {
          matches[n - 1] += std::min(count, it->second);
        }
      }
    }
  }

  BleuScores scores(max_n, 0.0);
  if (hyp_len == 0) return scores;
  const double brevity =
      hyp_len < ref_len
          ? std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len))
          : 1.0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (matches[n - 1] == 0) {
      // Every higher order is zero as well.
      break;
    }
    log_sum += std::log(static_cast<double>(matches[n - 1]) /
                        static_cast<double>(totals[n - 1]));
    scores[n - 1] = brevity * std::exp(log_sum / static_cast<double>(n));
  }
  return scores;
}

EvalReport evaluate(std::span<const CorpusDocument> hypotheses,
                    std::span<const CorpusDocument> references) {
  std::vector<Tokens> hyp;
  std::vector<Tokens> ref;
  for (const CorpusDocument& d : hypotheses) hyp.push_back(normalized_tokens(d));
  for (const CorpusDocument& d : references) ref.push_back(normalized_tokens(d));

  EvalReport report;
  report.wer = mean_wer(hyp, ref);
  report.bleu = bleu(hyp, ref);
  report.bleu_doc_mean.assign(kMaxBleuOrder, 0.0);
  for (std::size_t d = 0; d < hyp.size(); ++d) {
    const BleuScores one = bleu(std::span(&hyp[d], 1), std::span(&ref[d], 1));
    for (std::size_t n = 0; n < kMaxBleuOrder; ++n) report.bleu_doc_mean[n] += one[n];
    report.hypothesis_tokens += hyp[d].size();
    report.reference_tokens += ref[d].size();
  }
  for (double& v : report.bleu_doc_mean) v /= static_cast<double>(hyp.size());
  report.documents = hyp.size();
  return report;
}

std::string format_report(const EvalReport& report) {
  std::string out = "Metric\tPerformance\tDocument mean\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "WER\t%.4f\t%.4f\n", report.wer, report.wer);
  out += buf;
  for (std::size_t n = 0; n < report.bleu.size(); ++n) {
    const double doc_mean = n < report.bleu_doc_mean.size() ? report.bleu_doc_mean[n] : 0.0;
    std::snprintf(buf, sizeof buf, "BLEU-%zu\t%.4f\t%.4f\n", n + 1, report.bleu[n], doc_mean);
    out += buf;
  }
  return out;
}

}  // namespace fieldnorm
