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

// Access to the bundled test fixtures.

#ifndef SIGNALSCOPE_TESTS_SUPPORT_FIXTURES_H_
#define SIGNALSCOPE_TESTS_SUPPORT_FIXTURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signalscope/corpus.h"
#include "signalscope/model.h"
#include "signalscope/rules.h"

namespace signalscope::testing {

// Absolute path of a file or directory below tests/fixtures.
std::string FixturePath(std::string_view relative);

// The ten-document fixture corpus with its POS sidecars.
LoadedCorpus LoadFixtureCorpus(int jobs = 1);

// Parses an inline TimeML fragment wrapped in a TimeML root element.
Document ParseFragment(std::string_view fragment,
                       std::string_view doc_id = "fragment");

// The five statistics tables, in the order used by "--table all".
inline constexpr const char *kTableNames[] = {"usage", "histogram", "pos",
                                              "ambiguity", "matrix"};

// One statistics table of `corpus` as CSV, POS taken from sidecars only.
std::string ComputeTableCsv(const Corpus &corpus, std::string_view table);

// Contents of golden/<table>.csv.
std::string GoldenCsv(std::string_view table);

// Documents whose only signalled links follow `rows`: for each
// (expression, relation, count), `count` signals with that surface, each
// cited by one TLINK with that relation. Signals are dealt round-robin over
// `documents` documents.
struct SyntheticRow {
  std::string expression;
  RelType relation;
  int count;
};
Corpus SyntheticCorpus(const std::vector<SyntheticRow> &rows, int documents);

// One row of rules/sentences.tsv.
struct RuleCase {
  int line = 0;
  std::string expression;
  int nth = 0;
  std::string label;
  std::string rationale;
  std::string relation;    // "-" when not checked
  std::string confidence;  // "-" when not checked
  std::string fragment;
};
std::vector<RuleCase> LoadRuleCases();

// Classifies the case's occurrence and returns a description of every
// mismatch, or an empty string when the case passes.
std::string CheckRuleCase(const RuleCase &rule_case, const SignalRules &rules);

}  // namespace signalscope::testing

#endif  // SIGNALSCOPE_TESTS_SUPPORT_FIXTURES_H_
