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

// Rule-based disambiguation of candidate signal expressions.
//
// Each lexicon entry names a rule set. A rule set inspects the shallow
// context of one occurrence (neighbouring tokens with POS and annotation
// flags, plus the clause around it) and assigns exactly one sense label,
// together with the identifier of the rule that fired. Rules within a set
// are tried in the order documented in rules.cc; the first match wins.

#ifndef SIGNALSCOPE_RULES_H_
#define SIGNALSCOPE_RULES_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "signalscope/corpus.h"
#include "signalscope/lexicon.h"
#include "signalscope/model.h"

namespace signalscope {

class RelationMatrix;

enum class Sense {
  kTemporalSignal,
  kTemporalExpression,
  kEmphasisOnly,
  kNonTemporal,
};

std::string_view ToString(Sense sense);

struct SenseLabel {
  Sense value = Sense::kNonTemporal;
  std::string rationale;  // "<rule set>/<rule>", e.g. "after/positional"

  bool operator==(const SenseLabel &) const = default;
};

struct ContextToken {
  std::string text;  // lowercased
  std::string pos;
  bool in_event = false;
  bool in_timex = false;
  std::optional<EventClass> event_class;
  bool past = false;  // VBD/VBN tag or a PAST-tense event instance

  bool operator==(const ContextToken &) const = default;
};

struct Occurrence {
  std::string doc_id;
  TokenRange range;
  CharSpan chars;
  std::string expression;
  std::string pos;  // tag of the first token

  // Up to five tokens on each side, in text order, never crossing the
  // sentence boundary.
  std::vector<ContextToken> left;
  std::vector<ContextToken> right;

  bool sentence_initial = false;
  // Sentence start, or right after ',', ';', ':', "but" or "and".
  bool clause_initial = false;
  std::string next_pos;
  bool negation_before = false;  // not/n't/never/no within 3 tokens before
  bool event_or_timex_left = false;   // anywhere earlier in the sentence
  bool event_or_timex_right = false;  // anywhere later in the sentence

  // Tokens after the occurrence up to the next ',', ';', ':' or sentence end.
  std::vector<ContextToken> clause_after;
  // For a clause-initial occurrence, the rest of the sentence after the
  // delimiter that ends clause_after; otherwise the sentence before it.
  std::vector<ContextToken> clause_other;

  // sid of a SIGNAL overlapping the occurrence, if any.
  std::optional<std::string> covering_signal;
  // Whether a TIMEX3 overlaps the occurrence.
  bool inside_timex = false;

  bool operator==(const Occurrence &) const = default;
};

// Word lists consulted by the rules. The defaults reproduce the documented
// behaviour; a JSON file with the same keys can override any list.
struct RuleConfig {
  std::set<std::string> motion_verbs;        // after: "go after"
  std::set<std::string> institutions;        // before: "before the council"
  std::set<std::string> logical_objects;     // before: "before taxes"
  std::set<std::string> reporting_verbs;     // when: "did not say when"
  std::set<std::string> negations;
  std::set<std::string> stative_verbs;       // while: contrastive reading
  std::set<std::string> contrast_openers;    // while: "but while"
  std::set<std::string> comparatives;        // recently: "more recently"
  std::vector<std::vector<std::string>> context_setting;  // when: "it comes to"

  static RuleConfig Defaults();
  // Throws Error on malformed JSON or unknown keys.
  static RuleConfig FromJson(std::string_view json);
  std::string ToJson() const;
};

// Every longest-first match of a lexicon expression in the document, in
// token order.
std::vector<Occurrence> FindOccurrences(
    const Document &doc, const CandidateLexicon &lexicon,
    PosSource pos_source = PosSource::kSidecarWithFallback);

enum class Confidence { kHigh, kMedium, kLow };
std::string_view ToString(Confidence confidence);

// Argument order of the suggested TLINK. kEventFirst: the event the signal
// phrase modifies is the source ("X until Y" gives X IBEFORE Y). kSignalFirst
// reverses the arguments and therefore inverts the relation.
enum class ArgOrder { kEventFirst, kSignalFirst };

struct RelationSuggestion {
  RelType relation = RelType::kBefore;
  Confidence confidence = Confidence::kLow;

  bool operator==(const RelationSuggestion &) const = default;
};

class SignalRules {
 public:
  explicit SignalRules(const CandidateLexicon &lexicon,
                       RuleConfig config = RuleConfig::Defaults());

  // Throws UnknownExpressionError when the expression is not in the lexicon.
  SenseLabel Classify(const Occurrence &occ) const;

  // Relation for a temporal occurrence: until gives IBEFORE (BEFORE when
  // negated or "at least"), former and previously give BEFORE, while gives
  // SIMULTANEOUS; anything else takes the majority relation from `matrix`,
  // then the lexicon default. Empty when none of these is available.
  // Throws ContractError unless label is TEMPORAL_SIGNAL.
  std::optional<RelationSuggestion> SuggestRelation(
      const Occurrence &occ, const SenseLabel &label, ArgOrder order,
      const RelationMatrix *matrix = nullptr) const;

  const CandidateLexicon &lexicon() const { return *lexicon_; }
  const RuleConfig &config() const { return config_; }

 private:
  const LexiconEntry &EntryFor(const Occurrence &occ) const;

  SenseLabel After(const Occurrence &occ) const;
  SenseLabel When(const Occurrence &occ) const;
  SenseLabel While(const Occurrence &occ) const;
  SenseLabel Before(const Occurrence &occ) const;
  SenseLabel Meanwhile(const Occurrence &occ) const;
  SenseLabel Former(const Occurrence &occ) const;
  SenseLabel Recently(const Occurrence &occ) const;
  SenseLabel Generic(const Occurrence &occ) const;

  bool Stative(const std::vector<ContextToken> &clause) const;

  const CandidateLexicon *lexicon_;
  RuleConfig config_;
};

}  // namespace signalscope

#endif  // SIGNALSCOPE_RULES_H_
