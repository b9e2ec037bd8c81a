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

// Curation lint: occurrences the rules read as temporal but that carry no
// annotation yet.

#ifndef SIGNALSCOPE_LINT_H_
#define SIGNALSCOPE_LINT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signalscope/corpus.h"
#include "signalscope/rules.h"

namespace signalscope {

enum class ProposedEdit {
  kAddSignal,          // a SIGNAL with no relation to propose
  kAddSignalAndTlink,  // a SIGNAL plus a TLINK with suggested_relation
  kAddEvent,           // the governed event is not annotated either
  kAddTimex,           // a nominal temporal expression with no TIMEX3
};

std::string_view ToString(ProposedEdit edit);

struct CurationSuggestion {
  Occurrence occurrence;
  SenseLabel label;
  ProposedEdit proposed = ProposedEdit::kAddSignal;
  std::optional<RelType> suggested_relation;
  Confidence confidence = Confidence::kLow;
};

struct LintOptions {
  bool dedicated_rules_only = false;
  const RelationMatrix *matrix = nullptr;
  int jobs = 1;
};

// Sorted by document id, then token offset, then edit kind.
std::vector<CurationSuggestion> LintDocument(const Document &doc,
                                             const SignalRules &rules,
                                             const LintOptions &options = {});
std::vector<CurationSuggestion> LintCorpus(const Corpus &corpus,
                                           const SignalRules &rules,
                                           const LintOptions &options = {});

}  // namespace signalscope

#endif  // SIGNALSCOPE_LINT_H_
