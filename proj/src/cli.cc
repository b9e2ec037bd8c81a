// Copyright 2026 The SignalScope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "signalscope/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "signalscope/corpus.h"
#include "signalscope/error.h"
#include "signalscope/lexicon.h"
#include "signalscope/lint.h"
#include "signalscope/parallel.h"
#include "signalscope/predictor.h"
#include "signalscope/report.h"
#include "signalscope/rules.h"
#include "signalscope/stats.h"
#include "signalscope/validate.h"

namespace signalscope::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string> kTables = {"usage", "histogram", "pos",
                                          "ambiguity", "matrix"};

struct Options {
  // Shared.
  std::vector<std::string> inputs;
  std::string pos_dir;
  std::string lexicon;
  std::string format;
  std::string output;
  std::string label = "corpus";
  int jobs = 1;

  // stats
  std::string table = "all";
  std::vector<std::string> curated;
  std::string curated_label = "curated";
  std::string output_dir;
  std::string pos_source = "sidecar";

  // disambiguate / lint
  std::string rules_config;
  std::vector<std::string> expressions;
  bool dedicated_only = false;

  // train / predict / evaluate / lint
  bool canonical = false;
  std::string matrix;
  std::string expression;
  std::string protocol = "resub";
  bool no_fallback = false;
};

void AddShared(CLI::App *sub, Options *o, bool with_inputs = true) {
  if (with_inputs) {
    sub->add_option("inputs", o->inputs, ".tml files or directories")
        ->required();
    sub->add_option("--pos-dir", o->pos_dir,
                    "directory of <doc>.pos part-of-speech sidecars");
    sub->add_option("--label", o->label, "corpus label used in reports");
    sub->add_option("--jobs,-j", o->jobs, "documents processed in parallel")
        ->check(CLI::PositiveNumber);
  }
  sub->add_option("--lexicon", o->lexicon,
                  "candidate lexicon TSV (default: $SIGNALSCOPE_LEXICON, "
                  "else the bundled one)");
  sub->add_option("--format", o->format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  sub->add_option("--output,-o", o->output, "write data here, not stdout");
}

class Session {
 public:
  Session(const Options &o, std::ostream &out, std::ostream &err,
          bool interactive)
      : o_(o), out_(out), err_(err), interactive_(interactive) {}

  Format format(Format fallback_when_unset) const {
    if (!o_.format.empty()) return *ParseFormat(o_.format);
    return fallback_when_unset;
  }

  Format format() const {
    return format(interactive_ && o_.output.empty() ? Format::kText
                                                    : Format::kJson);
  }

  const CandidateLexicon &lexicon() {
    if (!lexicon_) {
      std::string path = o_.lexicon;
      if (path.empty()) {
        if (const char *env = std::getenv("SIGNALSCOPE_LEXICON")) path = env;
      }
      lexicon_ = path.empty() ? CandidateLexicon::Default()
                              : CandidateLexicon::Load(path);
    }
    return *lexicon_;
  }

  Corpus Load(const std::vector<std::string> &inputs,
              const std::string &label) {
    LoadOptions lo;
    lo.label = label;
    lo.jobs = o_.jobs;
    if (!o_.pos_dir.empty()) lo.pos_dir = o_.pos_dir;
    LoadedCorpus loaded = LoadCorpus(inputs, lo);
    for (const ParseDiagnostics &d : loaded.diagnostics) {
      for (const auto &e : d.recovered) {
        err_ << d.doc_id << ":" << e.location << ": recovered: " << e.message
             << "\n";
      }
    }
    for (const std::string &note : loaded.notes) err_ << "note: " << note << "\n";
    return std::move(loaded.corpus);
  }

  RuleConfig rule_config() const {
    if (o_.rules_config.empty()) return RuleConfig::Defaults();
    return RuleConfig::FromJson(ReadFile(o_.rules_config));
  }

  void Emit(const std::string &data) const {
    if (o_.output.empty()) {
      out_ << data;
      out_.flush();
      return;
    }
    WriteFile(o_.output, data);
  }

  static void WriteFile(const std::string &path, const std::string &data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError(path, "cannot open for writing");
    f << data;
    if (!f) throw IoError(path, "write failed");
  }

  std::ostream &err() { return err_; }

 private:
  const Options &o_;
  std::ostream &out_;
  std::ostream &err_;
  bool interactive_;
  std::optional<CandidateLexicon> lexicon_;
};

// ---------------------------------------------------------------------------

int Validate(const Options &o, Session &s) {
  Corpus corpus = s.Load(o.inputs, o.label);
  std::vector<ValidationReport> reports = ParallelMap<ValidationReport>(
      corpus.documents.size(), o.jobs,
      [&](std::size_t i) { return ValidateDocument(corpus.documents[i]); });
  s.Emit(RenderValidation(reports, s.format()));
  bool ok = std::all_of(reports.begin(), reports.end(),
                        [](const ValidationReport &r) { return r.ok(); });
  return ok ? kExitOk : kExitInvalid;
}

PosSource ParsePosSource(const std::string &name) {
  if (name == "sidecar") return PosSource::kSidecar;
  if (name == "fallback") return PosSource::kFallback;
  return PosSource::kSidecarWithFallback;
}

std::string RenderTable(const std::string &table, const Options &o,
                        const Corpus &corpus, const Corpus *curated,
                        Session &s, Format format) {
  if (table == "usage") {
    return RenderUsage(SignalUsageSummary(corpus, o.jobs), corpus.label,
                       format);
  }
  if (table == "histogram") {
    return RenderHistogram(TlinksPerSignalHistogram(corpus, o.jobs),
                           corpus.label, format);
  }
  if (table == "pos") {
    PosDistribution d =
        SignalPosDistribution(corpus, ParsePosSource(o.pos_source), o.jobs);
    if (d.excluded > 0) {
      s.err() << "note: " << d.excluded
              << " signal(s) without a part-of-speech tag excluded\n";
    }
    return RenderPos(d, corpus.label, format);
  }
  if (table == "ambiguity") {
    AmbiguityTable before =
        ExpressionAmbiguityTable(corpus, s.lexicon(), o.jobs);
    if (curated == nullptr) return RenderAmbiguity(before, corpus.label, format);
    AmbiguityTable after =
        ExpressionAmbiguityTable(*curated, s.lexicon(), o.jobs);
    return RenderPairedAmbiguity(PairAmbiguityTables(before, after),
                                 corpus.label, curated->label, format);
  }
  return RenderMatrix(SignalRelationMatrix(corpus, o.jobs), corpus.label,
                      format);
}

int Stats(const Options &o, Session &s) {
  Corpus corpus = s.Load(o.inputs, o.label);
  std::optional<Corpus> curated;
  if (!o.curated.empty()) curated = s.Load(o.curated, o.curated_label);
  const Corpus *cur = curated ? &*curated : nullptr;

  std::vector<std::string> tables =
      o.table == "all" ? kTables : std::vector<std::string>{o.table};
  if (!o.output_dir.empty()) {
    Format format = s.format(Format::kCsv);
    std::error_code ec;
    fs::create_directories(o.output_dir, ec);
    if (ec) throw IoError(o.output_dir, ec.message());
    const char *ext = format == Format::kCsv    ? ".csv"
                      : format == Format::kJson ? ".json"
                                                : ".txt";
    for (const std::string &t : tables) {
      Session::WriteFile((fs::path(o.output_dir) / (t + ext)).string(),
                         RenderTable(t, o, corpus, cur, s, format));
    }
    return kExitOk;
  }
  std::string data;
  for (const std::string &t : tables) {
    data += RenderTable(t, o, corpus, cur, s, s.format());
  }
  s.Emit(data);
  return kExitOk;
}

int Disambiguate(const Options &o, Session &s) {
  Corpus corpus = s.Load(o.inputs, o.label);
  SignalRules rules(s.lexicon(), s.rule_config());
  std::vector<std::string> wanted;
  for (const std::string &e : o.expressions) {
    wanted.push_back(NormalizeExpression(e));
    if (rules.lexicon().Find(wanted.back()) == nullptr) {
      throw UnknownExpressionError(wanted.back());
    }
  }
  auto parts = ParallelMap<std::vector<LabelledOccurrence>>(
      corpus.documents.size(), o.jobs, [&](std::size_t i) {
        std::vector<LabelledOccurrence> out;
        for (Occurrence &occ :
             FindOccurrences(corpus.documents[i], rules.lexicon())) {
          if (!wanted.empty() &&
              std::find(wanted.begin(), wanted.end(), occ.expression) ==
                  wanted.end()) {
            continue;
          }
          SenseLabel label = rules.Classify(occ);
          out.push_back({std::move(occ), std::move(label)});
        }
        return out;
      });
  std::vector<LabelledOccurrence> all;
  for (auto &p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  s.Emit(RenderOccurrences(all, s.format()));
  return kExitOk;
}

RelationMatrix LoadMatrix(const std::string &path) {
  try {
    return RelationMatrix::FromJson(ReadFile(path));
  } catch (const IoError &) {
    throw;
  } catch (const Error &e) {
    throw IoError(path, e.what());
  }
}

int Lint(const Options &o, Session &s) {
  Corpus corpus = s.Load(o.inputs, o.label);
  SignalRules rules(s.lexicon(), s.rule_config());
  std::optional<RelationMatrix> matrix;
  if (!o.matrix.empty()) matrix = LoadMatrix(o.matrix);
  LintOptions lo;
  lo.dedicated_rules_only = o.dedicated_only;
  lo.matrix = matrix ? &*matrix : nullptr;
  lo.jobs = o.jobs;
  s.Emit(RenderLint(LintCorpus(corpus, rules, lo), s.format()));
  return kExitOk;
}

int Train(const Options &o, Session &s) {
  Corpus corpus = s.Load(o.inputs, o.label);
  if (!o.format.empty() && o.format != "json") {
    s.err() << "note: matrices are always written as JSON\n";
  }
  s.Emit(TrainMatrix(corpus, o.canonical, o.jobs).ToJson());
  return kExitOk;
}

int Predict(const Options &o, Session &s) {
  RelationMatrix matrix = LoadMatrix(o.matrix);
  std::string expr = NormalizeExpression(o.expression);
  std::optional<RelType> fallback;
  if (!o.no_fallback) {
    if (const LexiconEntry *e = s.lexicon().Find(expr)) {
      fallback = e->default_relation;
    }
  }
  // The bare relation name unless a format is asked for.
  s.Emit(RenderPrediction(expr, Predict(matrix, expr, fallback),
                          s.format(Format::kText)));
  return kExitOk;
}

int Evaluate(const Options &o, Session &s) {
  Corpus corpus = s.Load(o.inputs, o.label);
  Protocol protocol = o.protocol == "lodo" ? Protocol::kLeaveOneDocumentOut
                                           : Protocol::kResubstitution;
  const CandidateLexicon *fallback = o.no_fallback ? nullptr : &s.lexicon();
  EvaluationResult r =
      signalscope::Evaluate(protocol, corpus, o.canonical, fallback, o.jobs);
  s.Emit(RenderEvaluation(r, corpus.label, s.format()));
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err, bool interactive) {
  Options o;
  CLI::App app{"Profile temporal signals in TimeML corpora.", "signalscope"};
  app.require_subcommand(1);

  CLI::App *validate = app.add_subcommand("validate", "check document invariants");
  AddShared(validate, &o);

  CLI::App *stats = app.add_subcommand("stats", "signal statistics tables");
  AddShared(stats, &o);
  stats->add_option("--table", o.table, "usage|histogram|pos|ambiguity|matrix|all")
      ->check(CLI::IsMember({"usage", "histogram", "pos", "ambiguity",
                             "matrix", "all"}));
  stats->add_option("--curated", o.curated,
                    "curated version of the corpus, paired in the ambiguity table");
  stats->add_option("--curated-label", o.curated_label);
  stats->add_option("--output-dir", o.output_dir, "one file per table");
  stats->add_option("--pos-source", o.pos_source,
                    "sidecar (default), fallback, or mixed")
      ->check(CLI::IsMember({"sidecar", "fallback", "mixed"}));

  CLI::App *disamb =
      app.add_subcommand("disambiguate", "label every candidate occurrence");
  AddShared(disamb, &o);
  disamb->add_option("--rules-config", o.rules_config, "JSON word lists");
  disamb->add_option("--expression", o.expressions, "restrict to expression(s)");

  CLI::App *lint = app.add_subcommand("lint", "suggest missing annotations");
  AddShared(lint, &o);
  lint->add_option("--rules-config", o.rules_config, "JSON word lists");
  lint->add_option("--matrix", o.matrix, "trained relation matrix");
  lint->add_flag("--dedicated-only", o.dedicated_only,
                 "only expressions with a dedicated rule set");

  CLI::App *train = app.add_subcommand("train", "count relations per signal");
  AddShared(train, &o);
  train->add_flag("--canonical", o.canonical, "fold inverse relations");

  CLI::App *predict = app.add_subcommand("predict", "majority relation lookup");
  AddShared(predict, &o, /*with_inputs=*/false);
  predict->add_option("--matrix", o.matrix, "trained matrix JSON")->required();
  predict->add_option("--expression", o.expression)->required();
  predict->add_flag("--no-fallback", o.no_fallback,
                    "do not fall back to the lexicon default");

  CLI::App *evaluate = app.add_subcommand("evaluate", "score the majority predictor");
  AddShared(evaluate, &o);
  evaluate->add_option("--protocol", o.protocol, "resub or lodo")
      ->check(CLI::IsMember({"resub", "lodo"}));
  evaluate->add_flag("--canonical", o.canonical, "fold inverse relations");
  evaluate->add_flag("--no-fallback", o.no_fallback,
                     "do not fall back to the lexicon default");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session session(o, out, err, interactive);
  try {
    if (*validate) return Validate(o, session);
    if (*stats) return Stats(o, session);
    if (*disamb) return Disambiguate(o, session);
    if (*lint) return Lint(o, session);
    if (*train) return Train(o, session);
    if (*predict) return Predict(o, session);
    if (*evaluate) return Evaluate(o, session);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownExpressionError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace signalscope::cli
