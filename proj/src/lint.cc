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

#include "signalscope/lint.h"

#include <algorithm>
#include <tuple>

#include "signalscope/parallel.h"

namespace signalscope {

std::string_view ToString(ProposedEdit edit) {
  switch (edit) {
    case ProposedEdit::kAddSignal: return "add SIGNAL";
    case ProposedEdit::kAddSignalAndTlink: return "add SIGNAL+TLINK";
    case ProposedEdit::kAddEvent: return "add EVENT";
    case ProposedEdit::kAddTimex: return "add TIMEX3";
  }
  return "add SIGNAL";
}

std::vector<CurationSuggestion> LintDocument(const Document &doc,
                                             const SignalRules &rules,
                                             const LintOptions &options) {
  std::vector<CurationSuggestion> out;
  for (Occurrence &occ : FindOccurrences(doc, rules.lexicon())) {
    const LexiconEntry *entry = rules.lexicon().Find(occ.expression);
    if (options.dedicated_rules_only && !HasDedicatedRule(*entry)) continue;
    SenseLabel label = rules.Classify(occ);

    if (label.value == Sense::kTemporalExpression) {
      if (occ.inside_timex) continue;
      CurationSuggestion s{occ, label, ProposedEdit::kAddTimex, std::nullopt,
                           Confidence::kLow};
      out.push_back(std::move(s));
      continue;
    }
    if (label.value != Sense::kTemporalSignal || !entry->candidate ||
        occ.covering_signal) {
      continue;
    }
    auto rel = rules.SuggestRelation(occ, label, ArgOrder::kEventFirst,
                                     options.matrix);
    bool governed = std::any_of(
        occ.right.begin(), occ.right.end(),
        [](const ContextToken &t) { return t.in_event || t.in_timex; });
    CurationSuggestion s;
    s.occurrence = occ;
    s.label = label;
    if (rel) {
      s.proposed = ProposedEdit::kAddSignalAndTlink;
      s.suggested_relation = rel->relation;
      s.confidence = rel->confidence;
    } else {
      s.proposed = ProposedEdit::kAddSignal;
      s.confidence = Confidence::kLow;
    }
    out.push_back(s);
    if (!governed) {
      CurationSuggestion e{std::move(occ), label, ProposedEdit::kAddEvent,
                           std::nullopt, Confidence::kLow};
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<CurationSuggestion> LintCorpus(const Corpus &corpus,
                                           const SignalRules &rules,
                                           const LintOptions &options) {
  auto parts = ParallelMap<std::vector<CurationSuggestion>>(
      corpus.documents.size(), options.jobs, [&](std::size_t i) {
        return LintDocument(corpus.documents[i], rules, options);
      });
  std::vector<CurationSuggestion> out;
  for (auto &p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(out));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CurationSuggestion &a, const CurationSuggestion &b) {
                     return std::tie(a.occurrence.doc_id,
                                     a.occurrence.range.begin, a.proposed) <
                            std::tie(b.occurrence.doc_id,
                                     b.occurrence.range.begin, b.proposed);
                   });
  return out;
}

}  // namespace signalscope
