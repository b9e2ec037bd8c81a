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

#ifndef SIGNALSCOPE_LEXICON_H_
#define SIGNALSCOPE_LEXICON_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "signalscope/model.h"

namespace signalscope {

// Rule set applied to occurrences of an expression.
enum class RuleId {
  kPreviously,
  kAfter,
  kWhen,
  kWhile,
  kBefore,
  kUntil,
  kAlready,
  kMeanwhile,
  kAgain,
  kFormer,
  kRecently,
  kGeneric,
};

std::string_view ToString(RuleId rule);
std::optional<RuleId> ParseRuleId(std::string_view name);

struct LexiconEntry {
  std::string expression;  // lowercase, single-spaced
  bool candidate = true;
  std::optional<RelType> default_relation;
  RuleId rule = RuleId::kGeneric;

  bool operator==(const LexiconEntry &) const = default;
};

struct ExpressionMatch {
  TokenRange range;
  const LexiconEntry *entry = nullptr;
};

class CandidateLexicon {
 public:
  CandidateLexicon() = default;
  explicit CandidateLexicon(std::vector<LexiconEntry> entries);

  // Parses the TSV format: expression, candidate flag, default relation ("-"
  // for none), rule id. '#' starts a comment line. Throws Error naming the
  // offending line.
  static CandidateLexicon Parse(std::string_view text);

  // Throws IoError when the file cannot be read.
  static CandidateLexicon Load(const std::string &path);

  // The lexicon bundled with the library.
  static const CandidateLexicon &Default();
  static std::string_view DefaultText();

  const LexiconEntry *Find(std::string_view expression) const;
  const std::vector<LexiconEntry> &entries() const { return entries_; }
  std::size_t max_words() const { return max_words_; }

  // Scans left to right; at each token the longest matching expression wins
  // and the scan resumes after it, so no token belongs to two matches.
  std::vector<ExpressionMatch> Match(const std::vector<Token> &tokens) const;

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_words_ = 0;
};

// Expressions with a dedicated rule set, used to restrict curation runs.
bool HasDedicatedRule(const LexiconEntry &entry);

}  // namespace signalscope

#endif  // SIGNALSCOPE_LEXICON_H_
