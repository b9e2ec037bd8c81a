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

#include "signalscope/stats.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "signalscope/parallel.h"

namespace signalscope {

namespace {

// Number of links of each class citing each existing signal.
struct SignalCitations {
  std::unordered_map<std::string, std::int64_t> tlinks;
  std::unordered_map<std::string, std::int64_t> slinks;
  std::unordered_map<std::string, std::int64_t> alinks;
};

SignalCitations CountCitations(const Document &doc) {
  SignalCitations c;
  auto cite = [&doc](const std::optional<std::string> &sid,
                     std::unordered_map<std::string, std::int64_t> *out) {
    if (sid && doc.FindSignal(*sid) != nullptr) ++(*out)[*sid];
  };
  for (const TLink &l : doc.tlinks) cite(l.signal, &c.tlinks);
  for (const SLink &l : doc.slinks) cite(l.signal, &c.slinks);
  for (const ALink &l : doc.alinks) cite(l.signal, &c.alinks);
  return c;
}

template <typename T, typename PerDoc>
T Fold(const Corpus &corpus, int jobs, PerDoc per_doc) {
  std::vector<T> parts = ParallelMap<T>(
      corpus.documents.size(), jobs,
      [&](std::size_t i) { return per_doc(corpus.documents[i]); });
  T total{};
  for (const T &p : parts) total += p;
  return total;
}

}  // namespace

UsageSummary &UsageSummary::operator+=(const UsageSummary &o) {
  n_signals += o.n_signals;
  n_used_by_tlink += o.n_used_by_tlink;
  n_used_by_alink += o.n_used_by_alink;
  n_used_by_slink += o.n_used_by_slink;
  n_tlinks_with_signal += o.n_tlinks_with_signal;
  n_signals_multi_tlink += o.n_signals_multi_tlink;
  return *this;
}

std::int64_t SignalHistogram::DistinctSignals() const {
  std::int64_t n = 0;
  for (const auto &[k, c] : counts) n += c;
  return n;
}

std::int64_t SignalHistogram::LinkSignalPairs() const {
  std::int64_t n = 0;
  for (const auto &[k, c] : counts) n += k * c;
  return n;
}

std::int64_t SignalHistogram::MultiLinkSignals() const {
  std::int64_t n = 0;
  for (const auto &[k, c] : counts) {
    if (k >= 2) n += c;
  }
  return n;
}

SignalHistogram &SignalHistogram::operator+=(const SignalHistogram &o) {
  for (const auto &[k, c] : o.counts) counts[k] += c;
  return *this;
}

std::int64_t PosDistribution::Total() const {
  std::int64_t n = 0;
  for (const auto &[tag, f] : frequency) n += f;
  return n;
}

double PosDistribution::Proportion(const std::string &tag) const {
  std::int64_t total = Total();
  auto it = frequency.find(tag);
  if (total == 0 || it == frequency.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

std::vector<std::pair<std::string, std::int64_t>> PosDistribution::Rows()
    const {
  std::vector<std::pair<std::string, std::int64_t>> rows(frequency.begin(),
                                                          frequency.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  return rows;
}

PosDistribution &PosDistribution::operator+=(const PosDistribution &o) {
  for (const auto &[tag, f] : o.frequency) frequency[tag] += f;
  excluded += o.excluded;
  return *this;
}

double AmbiguityRow::proportion() const {
  if (count_in_corpus == 0) return 0.0;
  return static_cast<double>(count_as_signal) /
         static_cast<double>(count_in_corpus);
}

std::int64_t RelationCountMatrix::Count(const std::string &expression,
                                        RelType rel) const {
  auto it = rows.find(expression);
  return it == rows.end() ? 0 : it->second[static_cast<std::size_t>(rel)];
}

std::int64_t RelationCountMatrix::RowTotal(const std::string &expression) const {
  auto it = rows.find(expression);
  if (it == rows.end()) return 0;
  std::int64_t n = 0;
  for (std::int64_t c : it->second) n += c;
  return n;
}

std::vector<std::string> RelationCountMatrix::Expressions() const {
  std::vector<std::string> out;
  for (const auto &[expr, counts] : rows) out.push_back(expr);
  std::stable_sort(out.begin(), out.end(),
                   [this](const std::string &a, const std::string &b) {
                     return RowTotal(a) > RowTotal(b);
                   });
  return out;
}

RelationCountMatrix &RelationCountMatrix::operator+=(
    const RelationCountMatrix &o) {
  for (const auto &[expr, counts] : o.rows) {
    auto &mine = rows[expr];
    for (std::size_t r = 0; r < kNumRelTypes; ++r) mine[r] += counts[r];
  }
  return *this;
}

UsageSummary SignalUsageSummary(const Document &doc) {
  SignalCitations c = CountCitations(doc);
  UsageSummary s;
  s.n_signals = static_cast<std::int64_t>(doc.signals.size());
  // Distinct signals, so a duplicated sid counts once.
  s.n_used_by_tlink = static_cast<std::int64_t>(c.tlinks.size());
  s.n_used_by_slink = static_cast<std::int64_t>(c.slinks.size());
  s.n_used_by_alink = static_cast<std::int64_t>(c.alinks.size());
  for (const auto &[sid, n] : c.tlinks) {
    s.n_tlinks_with_signal += n;
    if (n >= 2) ++s.n_signals_multi_tlink;
  }
  return s;
}

UsageSummary SignalUsageSummary(const Corpus &corpus, int jobs) {
  return Fold<UsageSummary>(corpus, jobs, [](const Document &d) {
    return SignalUsageSummary(d);
  });
}

SignalHistogram TlinksPerSignalHistogram(const Document &doc) {
  SignalHistogram h;
  for (const auto &[sid, n] : CountCitations(doc).tlinks) ++h.counts[n];
  return h;
}

SignalHistogram TlinksPerSignalHistogram(const Corpus &corpus, int jobs) {
  return Fold<SignalHistogram>(corpus, jobs, [](const Document &d) {
    return TlinksPerSignalHistogram(d);
  });
}

PosDistribution SignalPosDistribution(const Document &doc, PosSource source) {
  PosDistribution dist;
  for (const Signal &s : doc.signals) {
    std::optional<std::string> tag;
    if (!s.span.empty()) tag = TokenTag(doc, s.span.begin, source);
    if (tag) {
      ++dist.frequency[*tag];
    } else {
      ++dist.excluded;
    }
  }
  return dist;
}

PosDistribution SignalPosDistribution(const Corpus &corpus, PosSource source,
                                      int jobs) {
  return Fold<PosDistribution>(corpus, jobs, [source](const Document &d) {
    return SignalPosDistribution(d, source);
  });
}

AmbiguityTable ExpressionCounts(const Document &doc,
                                const CandidateLexicon &lexicon) {
  std::set<std::pair<std::size_t, std::size_t>> signal_spans;
  for (const Signal &s : doc.signals) {
    signal_spans.emplace(s.span.begin, s.span.end);
  }
  std::unordered_map<const LexiconEntry *, AmbiguityRow> by_entry;
  for (const ExpressionMatch &m : lexicon.Match(doc.tokens)) {
    AmbiguityRow &row = by_entry[m.entry];
    ++row.count_in_corpus;
    if (signal_spans.contains({m.range.begin, m.range.end})) {
      ++row.count_as_signal;
    }
  }
  AmbiguityTable table;
  for (const LexiconEntry &e : lexicon.entries()) {
    if (!e.candidate) continue;
    AmbiguityRow row = by_entry[&e];
    row.expression = e.expression;
    table.push_back(std::move(row));
  }
  return table;
}

AmbiguityTable ExpressionAmbiguityTable(const Corpus &corpus,
                                        const CandidateLexicon &lexicon,
                                        int jobs) {
  std::vector<AmbiguityTable> parts = ParallelMap<AmbiguityTable>(
      corpus.documents.size(), jobs, [&](std::size_t i) {
        return ExpressionCounts(corpus.documents[i], lexicon);
      });
  AmbiguityTable total = ExpressionCounts(Document{}, lexicon);
  for (const AmbiguityTable &part : parts) {
    for (std::size_t i = 0; i < total.size(); ++i) {
      total[i].count_in_corpus += part[i].count_in_corpus;
      total[i].count_as_signal += part[i].count_as_signal;
    }
  }
  std::sort(total.begin(), total.end(),
            [](const AmbiguityRow &a, const AmbiguityRow &b) {
              if (a.count_as_signal != b.count_as_signal) {
                return a.count_as_signal > b.count_as_signal;
              }
              if (a.count_in_corpus != b.count_in_corpus) {
                return a.count_in_corpus > b.count_in_corpus;
              }
              return a.expression < b.expression;
            });
  return total;
}

std::vector<PairedAmbiguityRow> PairAmbiguityTables(
    const AmbiguityTable &before, const AmbiguityTable &after) {
  std::vector<PairedAmbiguityRow> out;
  for (const AmbiguityRow &b : before) {
    PairedAmbiguityRow row{b, AmbiguityRow{b.expression, 0, 0}};
    for (const AmbiguityRow &a : after) {
      if (a.expression == b.expression) {
        row.after = a;
        break;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

RelationCountMatrix SignalRelationMatrix(const Document &doc) {
  RelationCountMatrix m;
  for (const TLink &l : doc.tlinks) {
    if (!l.signal) continue;
    const Signal *s = doc.FindSignal(*l.signal);
    if (s == nullptr) continue;
    m.rows[s->surface][static_cast<std::size_t>(l.rel)] += 1;
  }
  return m;
}

RelationCountMatrix SignalRelationMatrix(const Corpus &corpus, int jobs) {
  return Fold<RelationCountMatrix>(corpus, jobs, [](const Document &d) {
    return SignalRelationMatrix(d);
  });
}

}  // namespace signalscope
