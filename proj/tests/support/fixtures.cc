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

#include "support/fixtures.h"

#include <sstream>

#include "signalscope/error.h"
#include "signalscope/parser.h"
#include "signalscope/report.h"
#include "signalscope/stats.h"

namespace signalscope::testing {

std::string FixturePath(std::string_view relative) {
  return std::string(SIGNALSCOPE_FIXTURE_DIR) + "/" + std::string(relative);
}

LoadedCorpus LoadFixtureCorpus(int jobs) {
  LoadOptions options;
  options.label = "fixtures";
  options.pos_dir = FixturePath("pos");
  options.jobs = jobs;
  return LoadCorpus({FixturePath("corpus")}, options);
}

Document ParseFragment(std::string_view fragment, std::string_view doc_id) {
  std::string xml = "<TimeML>" + std::string(fragment) + "</TimeML>";
  return ParseTimeml(xml, doc_id).document;
}

std::string ComputeTableCsv(const Corpus &corpus, std::string_view table) {
  const std::string &label = corpus.label;
  if (table == "usage") {
    return RenderUsage(SignalUsageSummary(corpus), label, Format::kCsv);
  }
  if (table == "histogram") {
    return RenderHistogram(TlinksPerSignalHistogram(corpus), label,
                           Format::kCsv);
  }
  if (table == "pos") {
    return RenderPos(SignalPosDistribution(corpus, PosSource::kSidecar), label,
                     Format::kCsv);
  }
  if (table == "ambiguity") {
    return RenderAmbiguity(
        ExpressionAmbiguityTable(corpus, CandidateLexicon::Default()), label,
        Format::kCsv);
  }
  if (table == "matrix") {
    return RenderMatrix(SignalRelationMatrix(corpus), label, Format::kCsv);
  }
  throw Error("unknown table " + std::string(table));
}

std::string GoldenCsv(std::string_view table) {
  return ReadFile(FixturePath("golden/" + std::string(table) + ".csv"));
}

Corpus SyntheticCorpus(const std::vector<SyntheticRow> &rows, int documents) {
  std::vector<std::string> bodies(documents);
  std::vector<std::string> links(documents);
  std::vector<int> next(documents, 0);
  int dealt = 0;
  for (const SyntheticRow &row : rows) {
    for (int i = 0; i < row.count; ++i, ++dealt) {
      int d = dealt % documents;
      std::string n = std::to_string(++next[d]);
      bodies[d] += "It <EVENT eid=\"e" + n +
                   "\" class=\"OCCURRENCE\">happened</EVENT> <SIGNAL sid=\"s" +
                   n + "\">" + row.expression + "</SIGNAL> the vote.\n";
      links[d] += "<MAKEINSTANCE eiid=\"ei" + n + "\" eventID=\"e" + n +
                  "\" tense=\"PAST\" aspect=\"NONE\" polarity=\"POS\" "
                  "pos=\"VERB\"/>\n<TLINK lid=\"l" + n + "\" relType=\"" +
                  std::string(ToString(row.relation)) +
                  "\" eventInstanceID=\"ei" + n +
                  "\" relatedToTime=\"t0\" signalID=\"s" + n + "\"/>\n";
    }
  }
  Corpus corpus;
  corpus.label = "synthetic";
  for (int d = 0; d < documents; ++d) {
    std::string id = "syn" + std::to_string(d);
    std::string xml =
        "<TimeML><DOCID>" + id +
        "</DOCID><DCT><TIMEX3 tid=\"t0\" type=\"DATE\" value=\"1998-01-01\" "
        "functionInDocument=\"CREATION_TIME\">1998</TIMEX3></DCT><TEXT>\n" +
        bodies[d] + "</TEXT>\n" + links[d] + "</TimeML>\n";
    corpus.documents.push_back(ParseTimeml(xml, id).document);
  }
  return corpus;
}

std::vector<RuleCase> LoadRuleCases() {
  std::istringstream in(ReadFile(FixturePath("rules/sentences.tsv")));
  std::vector<RuleCase> cases;
  std::string row;
  int line = 0;
  while (std::getline(in, row)) {
    ++line;
    if (row.empty() || row[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (int i = 0; i < 6; ++i) {
      std::size_t tab = row.find('\t', start);
      if (tab == std::string::npos) {
        throw Error("sentences.tsv line " + std::to_string(line) +
                    ": expected 7 columns");
      }
      cols.push_back(row.substr(start, tab - start));
      start = tab + 1;
    }
    cols.push_back(row.substr(start));
    RuleCase c;
    c.line = line;
    c.expression = cols[0];
    c.nth = std::stoi(cols[1]);
    c.label = cols[2];
    c.rationale = cols[3];
    c.relation = cols[4];
    c.confidence = cols[5];
    c.fragment = cols[6];
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string CheckRuleCase(const RuleCase &rule_case, const SignalRules &rules) {
  Document doc = ParseFragment(rule_case.fragment,
                               "line" + std::to_string(rule_case.line));
  int seen = 0;
  for (const Occurrence &occ : FindOccurrences(doc, rules.lexicon())) {
    if (occ.expression != rule_case.expression) continue;
    if (seen++ != rule_case.nth) continue;
    std::ostringstream problems;
    SenseLabel label = rules.Classify(occ);
    if (ToString(label.value) != rule_case.label ||
        label.rationale != rule_case.rationale) {
      problems << "label " << ToString(label.value) << " (" << label.rationale
               << "), expected " << rule_case.label << " ("
               << rule_case.rationale << "); ";
    }
    if (rule_case.relation != "-" && label.value == Sense::kTemporalSignal) {
      auto rel = rules.SuggestRelation(occ, label, ArgOrder::kEventFirst);
      std::string got = rel ? std::string(ToString(rel->relation)) + "/" +
                                  std::string(ToString(rel->confidence))
                            : "none";
      std::string want = rule_case.relation + "/" + rule_case.confidence;
      if (got != want) {
        problems << "relation " << got << ", expected " << want << "; ";
      }
    }
    return problems.str();
  }
  return "occurrence " + std::to_string(rule_case.nth) + " of \"" +
         rule_case.expression + "\" not found";
}

}  // namespace signalscope::testing
