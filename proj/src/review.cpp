#include "fieldnorm/review.hpp"

#include <cmath>
#include <fstream>

#include "fieldnorm/errors.hpp"
#include "fieldnorm/tagger.hpp"
#include "fieldnorm/text_util.hpp"

namespace fieldnorm {

using nlohmann::json;

std::string_view to_string(ReviewStatus status) {
  return status == ReviewStatus::Approved ? "approved" : "pending";
}

std::size_t ReviewDocument::decided() const {
  std::size_t n = 0;
  for (const ReviewRecord& r : records) {
    if (!r.machine.is_continuation() && r.decision) ++n;
  }
  return n;
}

std::size_t ReviewDocument::decidable() const {
  std::size_t n = 0;
  for (const ReviewRecord& r : records) {
    if (!r.machine.is_continuation()) ++n;
  }
  return n;
}

ReviewStatus ReviewDocument::status() const {
  return decided() == decidable() ? ReviewStatus::Approved : ReviewStatus::Pending;
}

ReviewDocument build_review_document(const CorpusDocument& machine,
                                     const Lexicon& lexicon,
                                     const SymbolClassTable& table, std::size_t top_k) {
  ReviewDocument doc;
  doc.id = machine.id;
  doc.source = machine.source;
  for (const AlignedRecord& rec : machine.records) doc.records.push_back({rec, {}, {}, {}});
  for (const LogicalWord& word : logical_words(machine)) {
    ReviewRecord& rr = doc.records[word.record];
    rr.word = word.original;
    if (rr.machine.pos == PosTag::PU) continue;
    const auto series = symbol_series(word.original, table);
    if (!series) continue;
    for (const Candidate& c : rank_candidates(series->symbols, lexicon, top_k)) {
      const LexiconEntry& e = *c.variant.entry;
      rr.candidates.push_back({c.variant.form(), e.lemma, e.gloss,
                               resolve_conflict(lexicon.by_lemma(e.lemma)).tag,
                               c.score.distance, c.score.value()});
    }
  }
  return doc;
}

AlignedRecord resolve_record(const ReviewRecord& record) {
  AlignedRecord out = record.machine;
  if (record.machine.is_continuation() || !record.decision) return out;
  const Decision& d = *record.decision;
  if (d.action == Decision::Action::Override) {
    out.normalized = d.normalized;
    out.gloss = d.gloss;
    out.pos = d.pos;
  } else if (d.candidate) {
    const ReviewCandidate& c = record.candidates.at(*d.candidate);
    out.normalized = c.form;
    out.gloss = c.gloss;
    out.pos = c.pos;
  }
  out.certainty = d.certainty.value_or(100.0);
  return out;
}

namespace {

json record_to_json(const AlignedRecord& rec) {
  return json{{"original", rec.original},
              {"normalized", rec.normalized},
              {"gloss", rec.gloss},
              {"certainty", rec.certainty},
              {"pos", rec.pos ? std::string(to_string(*rec.pos)) : std::string()}};
}

PosTag tag_from_json(const json& j, const char* field) {
  const auto tag = parse_pos_tag(j.get<std::string>());
  if (!tag) throw InvalidRequest(std::string("unknown POS tag in `") + field + "`");
  return *tag;
}

AlignedRecord record_from_json(const json& j) {
  AlignedRecord rec;
  rec.original = j.at("original").get<std::string>();
  rec.normalized = j.at("normalized").get<std::string>();
  rec.gloss = j.at("gloss").get<std::string>();
  rec.certainty = j.at("certainty").get<double>();
  const std::string pos = j.at("pos").get<std::string>();
  if (!pos.empty()) rec.pos = tag_from_json(j.at("pos"), "pos");
  return rec;
}

bool valid_certainty(double c) {
  const double tenths = c * 10.0;
  return c > 0.0 && c <= 100.0 && std::fabs(tenths - std::round(tenths)) < 1e-6;
}

bool has_control(const std::string& s) { return s.find_first_of("\t\n\r") != std::string::npos; }

}  // namespace

json to_json(const Decision& d) {
  json j;
  j["action"] = d.action == Decision::Action::Accept ? "accept" : "override";
  if (d.candidate) j["candidate"] = *d.candidate;
  if (d.action == Decision::Action::Override) {
    j["normalized"] = d.normalized;
    j["gloss"] = d.gloss;
    j["pos"] = d.pos ? std::string(to_string(*d.pos)) : std::string();
  }
  if (d.certainty) j["certainty"] = *d.certainty;
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

Decision decision_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidRequest("decision must be a JSON object");
    Decision d;
    const std::string action = j.at("action").get<std::string>();
    if (action == "accept") {
      d.action = Decision::Action::Accept;
      if (j.contains("candidate") && !j["candidate"].is_null()) {
        const auto idx = j["candidate"].get<long long>();
        if (idx < 0) throw InvalidRequest("candidate index must be non-negative");
        d.candidate = static_cast<std::size_t>(idx);
      }
    } else if (action == "override") {
      d.action = Decision::Action::Override;
      d.normalized = j.at("normalized").get<std::string>();
      d.gloss = j.value("gloss", std::string());
      d.pos = tag_from_json(j.at("pos"), "pos");
    } else {
      throw InvalidRequest("action must be `accept` or `override`");
    }
    if (j.contains("certainty") && !j["certainty"].is_null()) {
      d.certainty = j["certainty"].get<double>();
    }
    d.note = j.value("note", std::string());
    return d;
  } catch (const json::exception& e) {
    throw InvalidRequest(std::string("malformed decision: ") + e.what());
  }
}

json to_json(const ReviewDocument& doc) {
  json records = json::array();
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    const ReviewRecord& r = doc.records[i];
    json candidates = json::array();
    for (const ReviewCandidate& c : r.candidates) {
      candidates.push_back({{"form", c.form},
                            {"lemma", c.lemma},
                            {"gloss", c.gloss},
                            {"pos", std::string(to_string(c.pos))},
                            {"distance", c.distance},
                            {"score", c.score}});
    }
    records.push_back({{"index", i},
                       {"continuation", r.machine.is_continuation()},
                       {"word", r.word},
                       {"machine", record_to_json(r.machine)},
                       {"candidates", candidates},
                       {"decision", r.decision ? to_json(*r.decision) : json(nullptr)}});
  }
  return json{{"id", doc.id},
              {"source", doc.source},
              {"status", std::string(to_string(doc.status()))},
              {"records", records}};
}

ReviewDocument review_document_from_json(const json& j) {
  ReviewDocument doc;
  doc.id = j.at("id").get<std::string>();
  doc.source = j.value("source", std::string());
  for (const json& r : j.at("records")) {
    ReviewRecord rec;
    rec.machine = record_from_json(r.at("machine"));
    rec.word = r.value("word", std::string());
    for (const json& c : r.at("candidates")) {
      rec.candidates.push_back({c.at("form").get<std::string>(),
                                c.at("lemma").get<std::string>(),
                                c.at("gloss").get<std::string>(), tag_from_json(c.at("pos"), "pos"),
                                c.at("distance").get<std::size_t>(),
                                c.at("score").get<double>()});
    }
    if (r.contains("decision") && !r["decision"].is_null()) {
      rec.decision = decision_from_json(r["decision"]);
    }
    doc.records.push_back(std::move(rec));
  }
  return doc;
}

ReviewSession::ReviewSession(std::filesystem::path log_path) : log_path_(std::move(log_path)) {
  if (!std::filesystem::exists(*log_path_)) return;
  const std::vector<std::string> lines = split_lines(read_file(*log_path_));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    json entry;
    try {
      entry = json::parse(lines[i]);
    } catch (const json::exception&) {
      // A torn final line is what an interrupted append leaves behind.
      if (i + 1 == lines.size()) break;
      throw ConfigError("session log " + log_path_->string() + " line " +
                        std::to_string(i + 1) + " is not valid JSON");
    }
    const std::string type = entry.at("type").get<std::string>();
    if (type == "document") {
      ReviewDocument doc = review_document_from_json(entry.at("document"));
      docs_[doc.id] = std::move(doc);
    } else if (type == "decision") {
      const auto it = docs_.find(entry.at("document").get<std::string>());
      if (it == docs_.end()) {
        throw ConfigError("session log line " + std::to_string(i + 1) +
                          " refers to an unknown document");
      }
      apply_decision(it->second, entry.at("record").get<std::size_t>(),
                     decision_from_json(entry.at("decision")));
    }
  }
}

void ReviewSession::append(const json& entry) {
  if (!log_path_) return;
  std::ofstream out(*log_path_, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot append to " + log_path_->string());
  out << entry.dump() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + log_path_->string());
}

bool ReviewSession::add_document(ReviewDocument doc) {
  std::unique_lock lock(mutex_);
  if (docs_.count(doc.id) != 0) return false;
  append(json{{"type", "document"}, {"document", to_json(doc)}});
  const std::string id = doc.id;
  docs_.emplace(id, std::move(doc));
  return true;
}

std::vector<ReviewSession::Summary> ReviewSession::list() const {
  std::shared_lock lock(mutex_);
  std::vector<Summary> out;
  for (const auto& [id, doc] : docs_) {
    out.push_back({id, doc.status(), doc.records.size(), doc.decided(), doc.decidable()});
  }
  return out;
}

ReviewDocument ReviewSession::document(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = docs_.find(id);
  if (it == docs_.end()) throw NotFound("no document `" + id + "`");
  return it->second;
}

void ReviewSession::apply_decision(ReviewDocument& doc, std::size_t record,
                                   const Decision& decision) {
  if (record >= doc.records.size()) {
    throw NotFound("document `" + doc.id + "` has no record " + std::to_string(record));
  }
  ReviewRecord& rec = doc.records[record];
  if (rec.machine.is_continuation()) {
    throw InvalidRequest("record " + std::to_string(record) +
                         " is a continuation line and takes no decision");
  }
  if (decision.action == Decision::Action::Accept && decision.candidate &&
      *decision.candidate >= rec.candidates.size()) {
    throw InvalidRequest("record " + std::to_string(record) + " has no candidate " +
                         std::to_string(*decision.candidate));
  }
  if (decision.action == Decision::Action::Override) {
    if (decision.normalized.empty()) throw InvalidRequest("override needs a normalized form");
    if (!decision.pos) throw InvalidRequest("override needs a POS tag");
    if (has_control(decision.normalized) || has_control(decision.gloss)) {
      throw InvalidRequest("fields may not contain tabs or newlines");
    }
  }
  if (decision.certainty && !valid_certainty(*decision.certainty)) {
    throw InvalidRequest("certainty must be in (0, 100] with one decimal");
  }
  rec.decision = decision;
}

ReviewRecord ReviewSession::decide(const std::string& id, std::size_t record,
                                   const Decision& decision) {
  std::unique_lock lock(mutex_);
  const auto it = docs_.find(id);
  if (it == docs_.end()) throw NotFound("no document `" + id + "`");
  if (record < it->second.records.size() && it->second.records[record].decision == decision) {
    return it->second.records[record];
  }
  ReviewDocument candidate = it->second;
  apply_decision(candidate, record, decision);
  append(json{{"type", "decision"},
              {"document", id},
              {"record", record},
              {"decision", to_json(decision)}});
  it->second = std::move(candidate);
  return it->second.records[record];
}

std::string ReviewSession::export_document(const std::string& id, bool force) const {
  std::shared_lock lock(mutex_);
  const auto it = docs_.find(id);
  if (it == docs_.end()) throw NotFound("no document `" + id + "`");
  const ReviewDocument& doc = it->second;
  if (!force && doc.status() != ReviewStatus::Approved) {
    throw Conflict("document `" + id + "` has " +
                   std::to_string(doc.decidable() - doc.decided()) + " undecided records");
  }
  CorpusDocument gold;
  gold.id = doc.id;
  gold.source = doc.source;
  for (const ReviewRecord& r : doc.records) gold.records.push_back(resolve_record(r));
  return write_document(gold);
}

void ReviewSession::compact() {
  std::unique_lock lock(mutex_);
  if (!log_path_) return;
  std::filesystem::path tmp = *log_path_;
  tmp += ".tmp";
  std::string content;
  for (const auto& [id, doc] : docs_) {
    content += json{{"type", "document"}, {"document", to_json(doc)}}.dump();
    content += '\n';
  }
  write_file(tmp, content);
  std::filesystem::rename(tmp, *log_path_);
}

}  // namespace fieldnorm
