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

// Per-signal relation distributions and a majority-class relation predictor.
//
// The same event pair can be annotated BEFORE or AFTER depending on argument
// order, so relations can optionally be folded onto a canonical member of
// each inverse pair before counting.

#ifndef SIGNALSCOPE_PREDICTOR_H_
#define SIGNALSCOPE_PREDICTOR_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "signalscope/corpus.h"
#include "signalscope/lexicon.h"
#include "signalscope/model.h"
#include "signalscope/stats.h"

namespace signalscope {

struct CanonicalRelation {
  RelType value = RelType::kBefore;
  bool swapped = false;  // argument order was flipped to canonicalize

  bool operator==(const CanonicalRelation &) const = default;
};

// Canonical members: BEFORE, IBEFORE, INCLUDES, BEGINS, ENDS, SIMULTANEOUS,
// IDENTITY, DURING. Each other relation maps to the canonical inverse with
// swapped set; `swap_args` toggles swapped.
CanonicalRelation FoldRelation(RelType rel, bool swap_args = false);
bool IsCanonical(RelType rel);

class RelationMatrix {
 public:
  using Row = std::array<std::int64_t, kNumRelTypes>;

  RelationMatrix() = default;
  RelationMatrix(std::string label, bool canonical)
      : label_(std::move(label)), canonical_(canonical) {}

  // Counts `rel` for `expression`, folding it first in canonical mode.
  void Add(const std::string &expression, RelType rel, std::int64_t n = 1);
  RelationMatrix &operator+=(const RelationMatrix &other);
  RelationMatrix &operator-=(const RelationMatrix &other);

  std::int64_t Count(const std::string &expression, RelType rel) const;
  std::int64_t Total(const std::string &expression) const;
  // Highest count; ties go to the relation declared first in RelType.
  std::optional<RelType> Majority(const std::string &expression) const;

  const std::map<std::string, Row> &rows() const { return rows_; }
  const std::string &label() const { return label_; }
  bool canonical() const { return canonical_; }

  // {"corpus": ..., "canonical": ..., "tie_break_order": [...],
  //  "matrix": {expression: {RELATION: count}}}; zero counts are omitted.
  std::string ToJson() const;
  // Throws Error on malformed input.
  static RelationMatrix FromJson(std::string_view json);

  bool operator==(const RelationMatrix &) const = default;

 private:
  std::string label_;
  bool canonical_ = false;
  std::map<std::string, Row> rows_;
};

RelationMatrix TrainMatrix(const Document &doc, bool canonical);
RelationMatrix TrainMatrix(const Corpus &corpus, bool canonical, int jobs = 1);

// Unfolded matrix as computed by the statistics module.
RelationMatrix FromCountMatrix(const RelationCountMatrix &counts,
                               const std::string &label);

struct Prediction {
  enum class Source { kMatrix, kFallback, kUnknown };

  std::optional<RelType> relation;
  Source source = Source::kUnknown;
};

// Majority relation for `expression`; `fallback` when the expression is
// unseen; an unknown prediction when neither is available.
Prediction Predict(const RelationMatrix &matrix, std::string_view expression,
                   std::optional<RelType> fallback = std::nullopt);

enum class Protocol { kResubstitution, kLeaveOneDocumentOut };

struct AccuracyCounts {
  std::int64_t correct = 0;
  std::int64_t total = 0;

  double accuracy() const {
    return total == 0 ? 0.0
                      : static_cast<double>(correct) /
                            static_cast<double>(total);
  }
  bool operator==(const AccuracyCounts &) const = default;
};

struct EvaluationResult {
  Protocol protocol = Protocol::kResubstitution;
  bool canonical = false;
  AccuracyCounts overall;
  std::map<std::string, AccuracyCounts> per_expression;
};

// Scores the majority predictor on every signalled TLINK. A prediction is
// correct when it equals the link relation (folded in canonical mode).
// Unseen expressions fall back to the lexicon default, if a lexicon is given.
// Throws ContractError for leave-one-document-out on fewer than 2 documents.
EvaluationResult Evaluate(Protocol protocol, const Corpus &corpus,
                          bool canonical = false,
                          const CandidateLexicon *fallback = nullptr,
                          int jobs = 1);

std::string_view ToString(Protocol protocol);

}  // namespace signalscope

#endif  // SIGNALSCOPE_PREDICTOR_H_
