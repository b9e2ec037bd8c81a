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

#include "signalscope/predictor.h"

#include <json.hpp>

#include "signalscope/error.h"
#include "signalscope/parallel.h"

namespace signalscope {

using json = nlohmann::ordered_json;

namespace {

std::size_t Index(RelType rel) { return static_cast<std::size_t>(rel); }

void Score(const Document &doc, const RelationMatrix &matrix,
           const CandidateLexicon *fallback, EvaluationResult *result) {
  for (const TLink &l : doc.tlinks) {
    if (!l.signal) continue;
    const Signal *s = doc.FindSignal(*l.signal);
    if (s == nullptr) continue;
    std::optional<RelType> default_rel;
    if (fallback != nullptr) {
      if (const LexiconEntry *e = fallback->Find(s->surface)) {
        default_rel = e->default_relation;
      }
    }
    Prediction p = Predict(matrix, s->surface, default_rel);
    RelType gold = matrix.canonical() ? FoldRelation(l.rel).value : l.rel;
    AccuracyCounts &row = result->per_expression[s->surface];
    ++row.total;
    ++result->overall.total;
    if (p.relation && *p.relation == gold) {
      ++row.correct;
      ++result->overall.correct;
    }
  }
}

}  // namespace

bool IsCanonical(RelType rel) {
  switch (rel) {
    case RelType::kBefore:
    case RelType::kIBefore:
    case RelType::kIncludes:
    case RelType::kBegins:
    case RelType::kEnds:
    case RelType::kSimultaneous:
    case RelType::kIdentity:
    case RelType::kDuring:
      return true;
    default:
      return false;
  }
}

CanonicalRelation FoldRelation(RelType rel, bool swap_args) {
  if (IsCanonical(rel)) return {rel, swap_args};
  return {Inverse(rel), !swap_args};
}

void RelationMatrix::Add(const std::string &expression, RelType rel,
                         std::int64_t n) {
  RelType key = canonical_ ? FoldRelation(rel).value : rel;
  rows_[expression][Index(key)] += n;
}

RelationMatrix &RelationMatrix::operator+=(const RelationMatrix &other) {
  for (const auto &[expr, row] : other.rows_) {
    Row &mine = rows_[expr];
    for (std::size_t i = 0; i < kNumRelTypes; ++i) mine[i] += row[i];
  }
  return *this;
}

RelationMatrix &RelationMatrix::operator-=(const RelationMatrix &other) {
  for (const auto &[expr, row] : other.rows_) {
    Row &mine = rows_[expr];
    bool empty = true;
    for (std::size_t i = 0; i < kNumRelTypes; ++i) {
      mine[i] -= row[i];
      empty = empty && mine[i] == 0;
    }
    if (empty) rows_.erase(expr);
  }
  return *this;
}

std::int64_t RelationMatrix::Count(const std::string &expression,
                                   RelType rel) const {
  auto it = rows_.find(expression);
  return it == rows_.end() ? 0 : it->second[Index(rel)];
}

std::int64_t RelationMatrix::Total(const std::string &expression) const {
  auto it = rows_.find(expression);
  if (it == rows_.end()) return 0;
  std::int64_t n = 0;
  for (std::int64_t c : it->second) n += c;
  return n;
}

std::optional<RelType> RelationMatrix::Majority(
    const std::string &expression) const {
  auto it = rows_.find(expression);
  if (it == rows_.end()) return std::nullopt;
  std::optional<RelType> best;
  std::int64_t best_count = 0;
  for (RelType rel : AllRelTypes()) {
    std::int64_t c = it->second[Index(rel)];
    if (c > best_count) {
      best = rel;
      best_count = c;
    }
  }
  return best;
}

std::string RelationMatrix::ToJson() const {
  json out;
  out["corpus"] = label_;
  out["canonical"] = canonical_;
  json order = json::array();
  for (RelType rel : AllRelTypes()) order.push_back(ToString(rel));
  out["tie_break_order"] = order;
  json matrix = json::object();
  for (const auto &[expr, row] : rows_) {
    json counts = json::object();
    for (RelType rel : AllRelTypes()) {
      if (row[Index(rel)] != 0) counts[std::string(ToString(rel))] = row[Index(rel)];
    }
    matrix[expr] = counts;
  }
  out["matrix"] = matrix;
  return out.dump(2) + "\n";
}

RelationMatrix RelationMatrix::FromJson(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(std::string("relation matrix: ") + e.what());
  }
  if (!in.is_object() || !in.contains("matrix") || !in["matrix"].is_object()) {
    throw Error("relation matrix: missing \"matrix\" object");
  }
  RelationMatrix m(in.value("corpus", std::string()),
                   in.value("canonical", false));
  for (const auto &[expr, counts] : in["matrix"].items()) {
    if (!counts.is_object()) {
      throw Error("relation matrix: row \"" + expr + "\" is not an object");
    }
    Row &row = m.rows_[NormalizeExpression(expr)];
    for (const auto &[name, value] : counts.items()) {
      std::optional<RelType> rel = ParseRelType(name);
      if (!rel) throw Error("relation matrix: unknown relation " + name);
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw Error("relation matrix: bad count for " + expr + "/" + name);
      }
      row[Index(*rel)] += value.get<std::int64_t>();
    }
  }
  return m;
}

RelationMatrix TrainMatrix(const Document &doc, bool canonical) {
  RelationMatrix m("", canonical);
  for (const TLink &l : doc.tlinks) {
    if (!l.signal) continue;
    if (const Signal *s = doc.FindSignal(*l.signal)) m.Add(s->surface, l.rel);
  }
  return m;
}

RelationMatrix TrainMatrix(const Corpus &corpus, bool canonical, int jobs) {
  std::vector<RelationMatrix> parts = ParallelMap<RelationMatrix>(
      corpus.documents.size(), jobs, [&](std::size_t i) {
        return TrainMatrix(corpus.documents[i], canonical);
      });
  RelationMatrix total(corpus.label, canonical);
  for (const RelationMatrix &p : parts) total += p;
  return total;
}

RelationMatrix FromCountMatrix(const RelationCountMatrix &counts,
                               const std::string &label) {
  RelationMatrix m(label, false);
  for (const auto &[expr, row] : counts.rows) {
    for (RelType rel : AllRelTypes()) {
      if (row[Index(rel)] != 0) m.Add(expr, rel, row[Index(rel)]);
    }
  }
  return m;
}

Prediction Predict(const RelationMatrix &matrix, std::string_view expression,
                   std::optional<RelType> fallback) {
  std::optional<RelType> majority =
      matrix.Majority(NormalizeExpression(expression));
  if (majority) return {majority, Prediction::Source::kMatrix};
  if (fallback) return {fallback, Prediction::Source::kFallback};
  return {std::nullopt, Prediction::Source::kUnknown};
}

EvaluationResult Evaluate(Protocol protocol, const Corpus &corpus,
                          bool canonical, const CandidateLexicon *fallback,
                          int jobs) {
  EvaluationResult result;
  result.protocol = protocol;
  result.canonical = canonical;
  std::vector<RelationMatrix> parts = ParallelMap<RelationMatrix>(
      corpus.documents.size(), jobs, [&](std::size_t i) {
        return TrainMatrix(corpus.documents[i], canonical);
      });
  RelationMatrix full(corpus.label, canonical);
  for (const RelationMatrix &p : parts) full += p;

  if (protocol == Protocol::kResubstitution) {
    for (const Document &doc : corpus.documents) {
      Score(doc, full, fallback, &result);
    }
    return result;
  }
  if (corpus.documents.size() < 2) {
    throw ContractError(
        "leave-one-document-out evaluation needs at least 2 documents");
  }
  std::vector<EvaluationResult> folds = ParallelMap<EvaluationResult>(
      corpus.documents.size(), jobs, [&](std::size_t i) {
        RelationMatrix held_out = full;
        held_out -= parts[i];
        EvaluationResult fold;
        Score(corpus.documents[i], held_out, fallback, &fold);
        return fold;
      });
  for (const EvaluationResult &fold : folds) {
    result.overall.correct += fold.overall.correct;
    result.overall.total += fold.overall.total;
    for (const auto &[expr, counts] : fold.per_expression) {
      result.per_expression[expr].correct += counts.correct;
      result.per_expression[expr].total += counts.total;
    }
  }
  return result;
}

std::string_view ToString(Protocol protocol) {
  return protocol == Protocol::kResubstitution ? "resub" : "lodo";
}

}  // namespace signalscope
