#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/lexicon.hpp"
#include "fieldnorm/normalizer.hpp"
#include "fieldnorm/symbols.hpp"

namespace fieldnorm {

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Export of a document that still has undecided records.
class Conflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReviewCandidate {
  std::string form;
  std::string lemma;
  std::string gloss;
  PosTag pos = PosTag::UN;
  std::size_t distance = 0;
  double score = 0.0;

  bool operator==(const ReviewCandidate&) const = default;
};

struct Decision {
  enum class Action { Accept, Override };

  Action action = Action::Accept;
  // Accept: index into the record's candidates; none keeps the machine output.
  std::optional<std::size_t> candidate;
  // Override fields.
  std::string normalized;
  std::string gloss;
  std::optional<PosTag> pos;
  // Defaults to 100.0% when absent.
  std::optional<double> certainty;
  std::string note;

  bool operator==(const Decision&) const = default;
};

struct ReviewRecord {
  AlignedRecord machine;
  std::string word;  // logical original with fragments joined
  std::vector<ReviewCandidate> candidates;
  std::optional<Decision> decision;
};

enum class ReviewStatus { Pending, Approved };

std::string_view to_string(ReviewStatus status);

struct ReviewDocument {
  std::string id;
  std::string source;
  std::vector<ReviewRecord> records;

  std::size_t decided() const;
  std::size_t decidable() const;  // non-continuation records
  // Approved once every non-continuation record carries a decision.
  ReviewStatus status() const;
};

// Machine document plus ranked candidates (top `top_k`) for every word.
ReviewDocument build_review_document(const CorpusDocument& machine,
                                     const Lexicon& lexicon,
                                     const SymbolClassTable& table,
                                     std::size_t top_k = 5);

// Gold record implied by a decision (or the machine record if undecided).
AlignedRecord resolve_record(const ReviewRecord& record);

nlohmann::json to_json(const Decision& decision);
Decision decision_from_json(const nlohmann::json& j);  // throws InvalidRequest
nlohmann::json to_json(const ReviewDocument& doc);
ReviewDocument review_document_from_json(const nlohmann::json& j);

// Review documents and decisions. With a backing file, every change is
// appended to it as one JSON line (a `document` snapshot or a `decision`),
// and reopening the file replays the log.
class ReviewSession {
 public:
  ReviewSession() = default;
  explicit ReviewSession(std::filesystem::path log_path);

  ReviewSession(const ReviewSession&) = delete;
  ReviewSession& operator=(const ReviewSession&) = delete;

  // Returns false (and changes nothing) when the id is already present.
  bool add_document(ReviewDocument doc);

  struct Summary {
    std::string id;
    ReviewStatus status;
    std::size_t records;
    std::size_t decided;
    std::size_t decidable;
  };
  std::vector<Summary> list() const;

  // Copy of the current state; throws NotFound.
  ReviewDocument document(const std::string& id) const;

  // Stores a decision; repeating an identical decision is a no-op.
  // Throws NotFound or InvalidRequest.
  ReviewRecord decide(const std::string& id, std::size_t record, const Decision& decision);

  // Gold corpus text. Throws Conflict when undecided records remain and
  // `force` is false.
  std::string export_document(const std::string& id, bool force = false) const;

  // Rewrites the log as one snapshot per document.
  void compact();

 private:
  void append(const nlohmann::json& entry);
  void apply_decision(ReviewDocument& doc, std::size_t record, const Decision& decision);

  std::optional<std::filesystem::path> log_path_;
  std::map<std::string, ReviewDocument> docs_;
  mutable std::shared_mutex mutex_;
};

}  // namespace fieldnorm
