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

// Signal-profiling statistics over a corpus.
//
// Every statistic is computed per document and merged with operator+=, so
// results do not depend on document order or on how the corpus is split.
// Only links whose signal reference resolves are counted.

#ifndef SIGNALSCOPE_STATS_H_
#define SIGNALSCOPE_STATS_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "signalscope/corpus.h"
#include "signalscope/lexicon.h"
#include "signalscope/model.h"

namespace signalscope {

struct UsageSummary {
  std::int64_t n_signals = 0;
  std::int64_t n_used_by_tlink = 0;
  std::int64_t n_used_by_alink = 0;
  std::int64_t n_used_by_slink = 0;
  std::int64_t n_tlinks_with_signal = 0;
  std::int64_t n_signals_multi_tlink = 0;

  UsageSummary &operator+=(const UsageSummary &other);
  bool operator==(const UsageSummary &) const = default;
};

// k -> number of signals cited by exactly k TLINKs, k >= 1.
struct SignalHistogram {
  std::map<std::int64_t, std::int64_t> counts;

  std::int64_t DistinctSignals() const;  // sum of count(k)
  std::int64_t LinkSignalPairs() const;  // sum of k * count(k)
  std::int64_t MultiLinkSignals() const;  // sum of count(k) for k >= 2

  SignalHistogram &operator+=(const SignalHistogram &other);
  bool operator==(const SignalHistogram &) const = default;
};

// Tag of the first token of each signal span.
struct PosDistribution {
  std::map<std::string, std::int64_t> frequency;
  std::int64_t excluded = 0;  // signals whose first token has no tag

  std::int64_t Total() const;
  double Proportion(const std::string &tag) const;
  // (tag, frequency) by descending frequency, then tag.
  std::vector<std::pair<std::string, std::int64_t>> Rows() const;

  PosDistribution &operator+=(const PosDistribution &other);
  bool operator==(const PosDistribution &) const = default;
};

struct AmbiguityRow {
  std::string expression;
  std::int64_t count_in_corpus = 0;
  std::int64_t count_as_signal = 0;

  // count_as_signal / count_in_corpus, or 0 for an absent expression.
  double proportion() const;
  bool operator==(const AmbiguityRow &) const = default;
};

// Rows for every candidate lexicon entry, absent ones included with zero
// counts, sorted by count_as_signal descending, then count_in_corpus
// descending, then expression.
using AmbiguityTable = std::vector<AmbiguityRow>;

// Same table for two versions of a corpus (before and after curation).
struct PairedAmbiguityRow {
  AmbiguityRow before;
  AmbiguityRow after;
};

// (signal surface, relation) -> TLINK count, relations as annotated.
struct RelationCountMatrix {
  std::map<std::string, std::array<std::int64_t, kNumRelTypes>> rows;

  std::int64_t Count(const std::string &expression, RelType rel) const;
  std::int64_t RowTotal(const std::string &expression) const;
  // Expressions by descending row total, then expression.
  std::vector<std::string> Expressions() const;

  RelationCountMatrix &operator+=(const RelationCountMatrix &other);
  bool operator==(const RelationCountMatrix &) const = default;
};

UsageSummary SignalUsageSummary(const Document &doc);
UsageSummary SignalUsageSummary(const Corpus &corpus, int jobs = 1);

SignalHistogram TlinksPerSignalHistogram(const Document &doc);
SignalHistogram TlinksPerSignalHistogram(const Corpus &corpus, int jobs = 1);

PosDistribution SignalPosDistribution(const Document &doc, PosSource source);
PosDistribution SignalPosDistribution(const Corpus &corpus, PosSource source,
                                      int jobs = 1);

// Per-document counts in lexicon order (no sorting, includes every entry).
AmbiguityTable ExpressionCounts(const Document &doc,
                                const CandidateLexicon &lexicon);
AmbiguityTable ExpressionAmbiguityTable(const Corpus &corpus,
                                        const CandidateLexicon &lexicon,
                                        int jobs = 1);
// Rows ordered as in `before`'s sorted table.
std::vector<PairedAmbiguityRow> PairAmbiguityTables(const AmbiguityTable &before,
                                                    const AmbiguityTable &after);

RelationCountMatrix SignalRelationMatrix(const Document &doc);
RelationCountMatrix SignalRelationMatrix(const Corpus &corpus, int jobs = 1);

}  // namespace signalscope

#endif  // SIGNALSCOPE_STATS_H_
