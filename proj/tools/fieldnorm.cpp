// fieldnorm: pre-annotation, tagging, validation, statistics, evaluation and
// the review server, as subcommands.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fieldnorm/corpus.hpp"
#include "fieldnorm/errors.hpp"
#include "fieldnorm/evaluation.hpp"
#include "fieldnorm/lexicon.hpp"
#include "fieldnorm/normalizer.hpp"
#include "fieldnorm/pipeline.hpp"
#include "fieldnorm/review.hpp"
#include "fieldnorm/server.hpp"
#include "fieldnorm/symbols.hpp"
#include "fieldnorm/tagger.hpp"
#include "fieldnorm/text_util.hpp"

namespace fs = std::filesystem;
using namespace fieldnorm;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

struct Resources {
  std::string lexicon;
  std::string symbols;
};

struct Loaded {
  SymbolClassTable table;
  Lexicon lexicon;
};

Loaded load_resources(const Resources& r) {
  SymbolClassTable table = SymbolClassTable::load(r.symbols);
  Lexicon lexicon = Lexicon::load(r.lexicon, table);
  return {std::move(table), std::move(lexicon)};
}

// Writes to a sibling temp file and renames, so a failed run leaves nothing.
void emit(const std::string& output, const std::string& content) {
  if (output.empty() || output == "-") {
    std::cout << content;
    return;
  }
  fs::path tmp = output;
  tmp += ".partial";
  write_file(tmp, content);
  fs::rename(tmp, output);
}

void append_diagnostics(const std::string& path, const std::vector<TagDiagnostic>& diags) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + path);
  for (const TagDiagnostic& d : diags) out << d.to_json_line() << '\n';
}

std::vector<CorpusDocument> read_corpora(const std::vector<std::string>& paths,
                                         const ParseOptions& options) {
  std::vector<CorpusDocument> docs;
  for (const std::string& p : paths) {
    try {
      docs.push_back(parse_document(read_file(p), fs::path(p).stem().string(), options));
    } catch (const ParseError& e) {
      throw std::runtime_error(p + ": " + e.what());
    }
  }
  return docs;
}

ReviewServer* g_server = nullptr;

void handle_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbol-class pre-annotation and gold-standard tooling for field transcriptions"};
  app.require_subcommand(1);

  Resources res;
  const auto add_resources = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", res.lexicon, "Lexicon file (lemma, gloss, pos, variants)")
        ->required();
    cmd->add_option("--symbols", res.symbols, "Symbol class table (cluster<TAB>class)")
        ->required();
  };

  // normalize
  std::string input, output, doc_id, diagnostics_path;
  std::string suffix_policy = "*";
  std::size_t suffix_depth = 1;
  double threshold = 0.7;
  std::string foreign_pattern;
  auto* normalize = app.add_subcommand("normalize", "Pre-annotate a transcription");
  add_resources(normalize);
  normalize->add_option("input", input, "Transcription file (whitespace-separated tokens)")
      ->required();
  normalize->add_option("-o,--output", output, "Corpus file to write (default stdout)");
  normalize->add_option("--id", doc_id, "Document id (default: input file stem)");
  normalize->add_option("--suffix-policy", suffix_policy,
                        "Comma-separated series suffixes to strip; * strips one symbol")
      ->capture_default_str();
  normalize->add_option("--suffix-depth", suffix_depth, "Successive suffix strips to try")
      ->capture_default_str();
  normalize->add_option("--threshold", threshold, "Fallback search at or below this score")
      ->capture_default_str();
  normalize->add_option("--foreign-pattern", foreign_pattern,
                        "Regular expression marking tokens as foreign");
  normalize->add_option("--diagnostics", diagnostics_path, "Append POS diagnostics (JSON lines)");

  // tag
  bool legacy = false;
  auto* tag_cmd = app.add_subcommand("tag", "Fill the POS column by lemma lookup");
  add_resources(tag_cmd);
  tag_cmd->add_option("input", input, "Corpus file")->required();
  tag_cmd->add_option("-o,--output", output, "Corpus file to write (default stdout)");
  tag_cmd->add_flag("--legacy", legacy, "Accept four-column input");
  tag_cmd->add_option("--diagnostics", diagnostics_path, "Append POS diagnostics (JSON lines)");

  // validate
  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "Check corpus files against the format");
  validate->add_option("files", files, "Corpus files")->required();
  validate->add_flag("--legacy", legacy, "Accept four-column lines");

  // stats
  auto* stats = app.add_subcommand("stats", "Corpus statistics and POS distribution");
  stats->add_option("files", files, "Corpus files")->required();
  stats->add_flag("--legacy", legacy, "Accept four-column lines");

  // eval
  std::vector<std::string> hyp_files, gold_files;
  auto* eval = app.add_subcommand("eval", "WER and BLEU of pre-annotations against gold");
  eval->add_option("--hyp", hyp_files, "Machine pre-annotation files")->required();
  eval->add_option("--gold", gold_files, "Gold files, paired by position")->required();
  eval->add_flag("--legacy", legacy, "Accept four-column lines");

  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t top_k = 5;
  std::string session_path;
  auto* serve = app.add_subcommand("serve", "Run the review HTTP API");
  add_resources(serve);
  serve->add_option("files", files, "Pre-annotated corpus files to load");
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();
  serve->add_option("--topk", top_k, "Candidates shown per record")->capture_default_str();
  serve->add_option("--session", session_path, "Session log file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize) {
      NormalizerOptions options;
      options.suffix_policy = SuffixPolicy::parse(suffix_policy);
      options.suffix_depth = suffix_depth;
      options.threshold = ScoreThreshold::from_double(threshold);
      if (!foreign_pattern.empty()) options.foreign_pattern = foreign_pattern;
      const Loaded loaded = load_resources(res);
      const std::string text = read_file(input);
      const std::string id = doc_id.empty() ? fs::path(input).stem().string() : doc_id;
      std::vector<TagDiagnostic> diags;
      const CorpusDocument doc =
          preannotate(text, id, loaded.lexicon, loaded.table, options, &diags);
      emit(output, write_document(doc));
      append_diagnostics(diagnostics_path, diags);
      return 0;
    }
    if (*tag_cmd) {
      const Loaded loaded = load_resources(res);
      ParseOptions popts;
      popts.allow_legacy = legacy;
      CorpusDocument doc = read_corpora({input}, popts).front();
      std::vector<TagDiagnostic> diags;
      retag_document(doc, loaded.lexicon, &diags);
      emit(output, write_document(doc));
      append_diagnostics(diagnostics_path, diags);
      return 0;
    }
    if (*validate) {
      ParseOptions popts;
      popts.allow_legacy = legacy;
      bool ok = true;
      for (const std::string& f : files) {
        std::string text;
        try {
          text = read_file(f);
        } catch (const std::exception& e) {
          std::cerr << f << ": " << e.what() << '\n';
          ok = false;
          continue;
        }
        const auto violations = validate_text(text, popts);
        for (const Violation& v : violations) {
          std::cout << f << ':' << v.line << ": " << v.message << '\n';
        }
        if (violations.empty()) std::cout << f << ": ok\n";
        ok = ok && violations.empty();
      }
      return ok ? 0 : kExitInvalid;
    }
    if (*stats) {
      ParseOptions popts;
      popts.allow_legacy = legacy;
      const auto docs = read_corpora(files, popts);
      std::cout << format_stats(compute_stats(docs));
      return 0;
    }
    if (*eval) {
      if (hyp_files.size() != gold_files.size()) {
        std::cerr << "eval: --hyp and --gold need the same number of files\n";
        return kExitError;
      }
      ParseOptions popts;
      popts.allow_legacy = legacy;
      const auto hyp = read_corpora(hyp_files, popts);
      const auto gold = read_corpora(gold_files, popts);
      std::cout << format_report(evaluate(hyp, gold));
      return 0;
    }
    if (*serve) {
      const Loaded loaded = load_resources(res);
      ReviewSession session(session_path);
      for (const CorpusDocument& doc : read_corpora(files, {})) {
        if (!session.add_document(build_review_document(doc, loaded.lexicon, loaded.table, top_k))) {
          std::cerr << "resuming " << doc.id << " from the session log\n";
        }
      }
      ReviewServer server(session);
      g_server = &server;
      std::signal(SIGINT, handle_signal);
      std::signal(SIGTERM, handle_signal);
      std::cerr << "listening on http://" << host << ':' << port << kApiPrefix << '\n';
      if (!server.listen(host, port)) {
        std::cerr << "cannot listen on " << host << ':' << port << '\n';
        return kExitError;
      }
      g_server = nullptr;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
