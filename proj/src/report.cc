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

#include "signalscope/report.h"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace signalscope {

using json = nlohmann::ordered_json;

namespace {

using Row = std::vector<std::string>;

std::string Csv(const Row &header, const std::vector<Row> &rows) {
  std::string out;
  auto line = [&out](const Row &r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) out += ',';
      out += CsvField(r[i]);
    }
    out += '\n';
  };
  line(header);
  for (const Row &r : rows) line(r);
  return out;
}

// First column left-aligned, the rest right-aligned.
std::string Text(const std::string &title, const Row &header,
                 const std::vector<Row> &rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const Row &r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], r[i].size());
    }
  }
  std::string out = title.empty() ? "" : title + "\n";
  auto line = [&](const Row &r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string pad(width[i] - std::min(width[i], r[i].size()), ' ');
      if (i > 0) s += "  ";
      s += i == 0 ? r[i] + pad : pad + r[i];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out += s + '\n';
  };
  line(header);
  for (const Row &r : rows) line(r);
  return out;
}

std::string Str(std::int64_t n) { return std::to_string(n); }

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string Dump(const json &j) { return j.dump(2) + "\n"; }

json Nullable(const std::optional<std::string> &s) {
  return s ? json(*s) : json(nullptr);
}

std::string ContextText(const std::vector<ContextToken> &tokens) {
  std::string s;
  for (const ContextToken &t : tokens) s += (s.empty() ? "" : " ") + t.text;
  return s;
}

json OccurrenceJson(const Occurrence &occ) {
  json j;
  j["doc_id"] = occ.doc_id;
  j["token_begin"] = occ.range.begin;
  j["token_end"] = occ.range.end;
  j["char_begin"] = occ.chars.begin;
  j["char_end"] = occ.chars.end;
  j["expression"] = occ.expression;
  j["pos"] = occ.pos;
  j["left_context"] = ContextText(occ.left);
  j["right_context"] = ContextText(occ.right);
  return j;
}

}  // namespace

std::optional<Format> ParseFormat(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "text") return Format::kText;
  return std::nullopt;
}

std::string_view ToString(Format format) {
  switch (format) {
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
    case Format::kText: return "text";
  }
  return "text";
}

std::string Percent(double fraction) { return Fixed(fraction * 100.0, 1); }

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string_view ExpressionNote(std::string_view expression) {
  if (expression == "if") {
    return "conditional: marks subordination more than temporal order";
  }
  return {};
}

std::string RenderUsage(const UsageSummary &u, const std::string &label,
                        Format format) {
  const Row header = {"n_signals",           "n_used_by_tlink",
                      "n_used_by_alink",     "n_used_by_slink",
                      "n_tlinks_with_signal", "n_signals_multi_tlink"};
  const Row values = {Str(u.n_signals),           Str(u.n_used_by_tlink),
                      Str(u.n_used_by_alink),     Str(u.n_used_by_slink),
                      Str(u.n_tlinks_with_signal), Str(u.n_signals_multi_tlink)};
  switch (format) {
    case Format::kCsv: return Csv(header, {values});
    case Format::kJson: {
      json j;
      j["table"] = "usage";
      j["corpus"] = label;
      for (std::size_t i = 0; i < header.size(); ++i) {
        j[header[i]] = std::stoll(values[i]);
      }
      return Dump(j);
    }
    case Format::kText: {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < header.size(); ++i) {
        rows.push_back({header[i], values[i]});
      }
      return Text("Signal usage (" + label + ")", {"field", "value"}, rows);
    }
  }
  return {};
}

std::string RenderHistogram(const SignalHistogram &h, const std::string &label,
                            Format format) {
  std::vector<Row> rows;
  for (const auto &[k, n] : h.counts) rows.push_back({Str(k), Str(n)});
  const Row header = {"tlinks_per_signal", "signals"};
  switch (format) {
    case Format::kCsv: return Csv(header, rows);
    case Format::kJson: {
      json j;
      j["table"] = "histogram";
      j["corpus"] = label;
      json counts = json::object();
      for (const auto &[k, n] : h.counts) counts[Str(k)] = n;
      j["histogram"] = counts;
      j["distinct_signals"] = h.DistinctSignals();
      j["link_signal_pairs"] = h.LinkSignalPairs();
      j["multi_link_signals"] = h.MultiLinkSignals();
      return Dump(j);
    }
    case Format::kText:
      return Text("TLINKs per signal (" + label + ")", header, rows) +
             "distinct signals: " + Str(h.DistinctSignals()) +
             ", (tlink, signal) pairs: " + Str(h.LinkSignalPairs()) + "\n";
  }
  return {};
}

std::string RenderPos(const PosDistribution &d, const std::string &label,
                      Format format) {
  const Row header = {"pos", "frequency", "proportion"};
  std::vector<Row> rows;
  for (const auto &[tag, n] : d.Rows()) {
    rows.push_back({tag, Str(n), Percent(d.Proportion(tag))});
  }
  switch (format) {
    case Format::kCsv: return Csv(header, rows);
    case Format::kJson: {
      json j;
      j["table"] = "pos";
      j["corpus"] = label;
      json list = json::array();
      for (const auto &[tag, n] : d.Rows()) {
        list.push_back({{"pos", tag},
                        {"frequency", n},
                        {"proportion", d.Proportion(tag)}});
      }
      j["rows"] = list;
      j["excluded"] = d.excluded;
      return Dump(j);
    }
    case Format::kText:
      return Text("Signal part of speech, first token (" + label + ")",
                  header, rows) +
             "excluded (no tag): " + Str(d.excluded) + "\n";
  }
  return {};
}

std::string RenderAmbiguity(const AmbiguityTable &table,
                            const std::string &label, Format format) {
  const Row header = {"expression", "count_in_corpus", "count_as_signal",
                      "proportion"};
  std::vector<Row> rows;
  for (const AmbiguityRow &r : table) {
    rows.push_back({r.expression, Str(r.count_in_corpus),
                    Str(r.count_as_signal), Percent(r.proportion())});
  }
  switch (format) {
    case Format::kCsv: return Csv(header, rows);
    case Format::kJson: {
      json j;
      j["table"] = "ambiguity";
      j["corpus"] = label;
      json list = json::array();
      for (const AmbiguityRow &r : table) {
        json row = {{"expression", r.expression},
                    {"count_in_corpus", r.count_in_corpus},
                    {"count_as_signal", r.count_as_signal},
                    {"proportion", r.proportion()}};
        if (!ExpressionNote(r.expression).empty()) {
          row["note"] = ExpressionNote(r.expression);
        }
        list.push_back(row);
      }
      j["rows"] = list;
      return Dump(j);
    }
    case Format::kText: {
      std::string out =
          Text("Candidate expressions (" + label + ")", header, rows);
      for (const AmbiguityRow &r : table) {
        if (!ExpressionNote(r.expression).empty()) {
          out += "note: " + r.expression + ": " +
                 std::string(ExpressionNote(r.expression)) + "\n";
        }
      }
      return out;
    }
  }
  return {};
}

std::string RenderPairedAmbiguity(const std::vector<PairedAmbiguityRow> &rows,
                                  const std::string &before_label,
                                  const std::string &after_label,
                                  Format format) {
  const Row header = {"expression",          "count_in_corpus",
                      "count_as_signal",     "proportion",
                      "count_in_corpus_after", "count_as_signal_after",
                      "proportion_after"};
  std::vector<Row> cells;
  for (const PairedAmbiguityRow &r : rows) {
    cells.push_back({r.before.expression, Str(r.before.count_in_corpus),
                     Str(r.before.count_as_signal),
                     Percent(r.before.proportion()),
                     Str(r.after.count_in_corpus), Str(r.after.count_as_signal),
                     Percent(r.after.proportion())});
  }
  switch (format) {
    case Format::kCsv: return Csv(header, cells);
    case Format::kJson: {
      json j;
      j["table"] = "ambiguity";
      j["corpus"] = before_label;
      j["corpus_after"] = after_label;
      json list = json::array();
      for (const PairedAmbiguityRow &r : rows) {
        list.push_back({{"expression", r.before.expression},
                        {"count_in_corpus", r.before.count_in_corpus},
                        {"count_as_signal", r.before.count_as_signal},
                        {"proportion", r.before.proportion()},
                        {"count_in_corpus_after", r.after.count_in_corpus},
                        {"count_as_signal_after", r.after.count_as_signal},
                        {"proportion_after", r.after.proportion()}});
      }
      j["rows"] = list;
      return Dump(j);
    }
    case Format::kText:
      return Text("Candidate expressions (" + before_label + " / " +
                      after_label + ")",
                  header, cells);
  }
  return {};
}

std::string RenderMatrix(const RelationCountMatrix &m, const std::string &label,
                         Format format) {
  Row header = {"expression", "total"};
  for (RelType rel : AllRelTypes()) header.emplace_back(ToString(rel));
  std::vector<Row> rows;
  for (const std::string &expr : m.Expressions()) {
    Row r = {expr, Str(m.RowTotal(expr))};
    for (RelType rel : AllRelTypes()) r.push_back(Str(m.Count(expr, rel)));
    rows.push_back(std::move(r));
  }
  switch (format) {
    case Format::kCsv: return Csv(header, rows);
    case Format::kJson: {
      json j;
      j["table"] = "matrix";
      j["corpus"] = label;
      json list = json::array();
      for (const std::string &expr : m.Expressions()) {
        json counts = json::object();
        for (RelType rel : AllRelTypes()) {
          if (m.Count(expr, rel) != 0) {
            counts[std::string(ToString(rel))] = m.Count(expr, rel);
          }
        }
        list.push_back({{"expression", expr},
                        {"total", m.RowTotal(expr)},
                        {"counts", counts}});
      }
      j["rows"] = list;
      return Dump(j);
    }
    case Format::kText: {
      // Only relations that occur, to keep the table narrow.
      std::vector<std::size_t> keep = {0, 1};
      for (std::size_t c = 2; c < header.size(); ++c) {
        bool any = std::any_of(rows.begin(), rows.end(),
                               [c](const Row &r) { return r[c] != "0"; });
        if (any) keep.push_back(c);
      }
      auto project = [&keep](const Row &r) {
        Row out;
        for (std::size_t c : keep) out.push_back(r[c]);
        return out;
      };
      std::vector<Row> narrow;
      for (const Row &r : rows) narrow.push_back(project(r));
      return Text("Relations per signal expression (" + label + ")",
                  project(header), narrow);
    }
  }
  return {};
}

std::string RenderValidation(const std::vector<ValidationReport> &reports,
                             Format format) {
  struct Item {
    const ValidationIssue *issue;
    const char *severity;
  };
  std::vector<Item> items;
  for (const ValidationReport &r : reports) {
    for (const ValidationIssue &i : r.errors) items.push_back({&i, "error"});
    for (const ValidationIssue &i : r.warnings) items.push_back({&i, "warning"});
  }
  const Row header = {"doc_id", "severity", "kind", "element_id", "message"};
  std::vector<Row> rows;
  for (const Item &it : items) {
    rows.push_back({it.issue->doc_id, it.severity,
                    std::string(ToString(it.issue->kind)), it.issue->element_id,
                    it.issue->message});
  }
  switch (format) {
    case Format::kCsv: return Csv(header, rows);
    case Format::kJson: {
      std::string out;
      for (const Row &r : rows) {
        json j;
        for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = r[i];
        out += j.dump() + "\n";
      }
      return out;
    }
    case Format::kText: {
      std::string out;
      std::size_t errors = 0;
      for (const Row &r : rows) {
        out += r[0] + ": " + r[1] + ": " + r[2] +
               (r[3].empty() ? "" : " [" + r[3] + "]") + ": " + r[4] + "\n";
        errors += r[1] == "error";
      }
      out += std::to_string(reports.size()) + " document(s), " +
             std::to_string(errors) + " error(s), " +
             std::to_string(rows.size() - errors) + " warning(s)\n";
      return out;
    }
  }
  return {};
}

std::string RenderOccurrences(const std::vector<LabelledOccurrence> &items,
                              Format format) {
  const Row header = {"doc_id",     "token_begin", "token_end", "char_begin",
                      "char_end",   "expression",  "pos",       "label",
                      "rationale",  "signal"};
  std::vector<Row> rows;
  for (const LabelledOccurrence &it : items) {
    const Occurrence &o = it.occurrence;
    rows.push_back({o.doc_id, Str(o.range.begin), Str(o.range.end),
                    Str(o.chars.begin), Str(o.chars.end), o.expression, o.pos,
                    std::string(ToString(it.label.value)), it.label.rationale,
                    o.covering_signal.value_or("")});
  }
  switch (format) {
    case Format::kCsv: return Csv(header, rows);
    case Format::kJson: {
      std::string out;
      for (const LabelledOccurrence &it : items) {
        json j = OccurrenceJson(it.occurrence);
        j["label"] = ToString(it.label.value);
        j["rationale"] = it.label.rationale;
        j["signal"] = Nullable(it.occurrence.covering_signal);
        out += j.dump() + "\n";
      }
      return out;
    }
    case Format::kText: {
      std::string out;
      for (const LabelledOccurrence &it : items) {
        const Occurrence &o = it.occurrence;
        out += o.doc_id + ":" + Str(o.chars.begin) + "  " + o.expression +
               "  " + std::string(ToString(it.label.value)) + "  (" +
               it.label.rationale + ")" +
               (o.covering_signal ? "  annotated " + *o.covering_signal : "") +
               "\n    ... " + ContextText(o.left) + " [" + o.expression +
               "] " + ContextText(o.right) + " ...\n";
      }
      return out;
    }
  }
  return {};
}

std::string RenderLint(const std::vector<CurationSuggestion> &items,
                       Format format) {
  const Row header = {"doc_id",    "token_begin", "token_end",
                      "char_begin", "char_end",   "expression",
                      "proposed",  "suggested_relation", "confidence",
                      "rationale"};
  auto rel_name = [](const CurationSuggestion &s) {
    return s.suggested_relation ? std::string(ToString(*s.suggested_relation))
                                : std::string();
  };
  switch (format) {
    case Format::kCsv: {
      std::vector<Row> rows;
      for (const CurationSuggestion &s : items) {
        const Occurrence &o = s.occurrence;
        rows.push_back({o.doc_id, Str(o.range.begin), Str(o.range.end),
                        Str(o.chars.begin), Str(o.chars.end), o.expression,
                        std::string(ToString(s.proposed)), rel_name(s),
                        std::string(ToString(s.confidence)),
                        s.label.rationale});
      }
      return Csv(header, rows);
    }
    case Format::kJson: {
      std::string out;
      for (const CurationSuggestion &s : items) {
        json j = OccurrenceJson(s.occurrence);
        j["label"] = ToString(s.label.value);
        j["rationale"] = s.label.rationale;
        j["proposed"] = ToString(s.proposed);
        j["suggested_relation"] =
            s.suggested_relation ? json(rel_name(s)) : json(nullptr);
        j["confidence"] = ToString(s.confidence);
        out += j.dump() + "\n";
      }
      return out;
    }
    case Format::kText: {
      std::string out;
      for (const CurationSuggestion &s : items) {
        const Occurrence &o = s.occurrence;
        out += o.doc_id + ":" + Str(o.chars.begin) + "  " +
               std::string(ToString(s.proposed)) + "  \"" + o.expression +
               "\"" + (s.suggested_relation ? "  " + rel_name(s) : "") +
               "  " + std::string(ToString(s.confidence)) + "  (" +
               s.label.rationale + ")\n    ... " + ContextText(o.left) +
               " [" + o.expression + "] " + ContextText(o.right) + " ...\n";
      }
      out += std::to_string(items.size()) + " suggestion(s)\n";
      return out;
    }
  }
  return {};
}

std::string RenderEvaluation(const EvaluationResult &result,
                             const std::string &label, Format format) {
  const Row header = {"expression", "correct", "total", "accuracy"};
  std::vector<Row> rows;
  rows.push_back({"(overall)", Str(result.overall.correct),
                  Str(result.overall.total),
                  Fixed(result.overall.accuracy(), 4)});
  for (const auto &[expr, c] : result.per_expression) {
    rows.push_back({expr, Str(c.correct), Str(c.total), Fixed(c.accuracy(), 4)});
  }
  switch (format) {
    case Format::kCsv: return Csv(header, rows);
    case Format::kJson: {
      json j;
      j["corpus"] = label;
      j["protocol"] = ToString(result.protocol);
      j["canonical"] = result.canonical;
      j["overall"] = {{"correct", result.overall.correct},
                      {"total", result.overall.total},
                      {"accuracy", result.overall.accuracy()}};
      json per = json::object();
      for (const auto &[expr, c] : result.per_expression) {
        per[expr] = {{"correct", c.correct},
                     {"total", c.total},
                     {"accuracy", c.accuracy()}};
      }
      j["per_expression"] = per;
      return Dump(j);
    }
    case Format::kText:
      return Text("Majority-relation accuracy (" + label + ", " +
                      std::string(ToString(result.protocol)) +
                      (result.canonical ? ", folded" : "") + ")",
                  header, rows);
  }
  return {};
}

std::string RenderPrediction(std::string_view expression,
                             const Prediction &p, Format format) {
  std::string rel =
      p.relation ? std::string(ToString(*p.relation)) : std::string("UNKNOWN");
  const char *source = p.source == Prediction::Source::kMatrix     ? "matrix"
                       : p.source == Prediction::Source::kFallback ? "fallback"
                                                                   : "unknown";
  switch (format) {
    case Format::kJson: {
      json j;
      j["expression"] = std::string(expression);
      j["relation"] = p.relation ? json(rel) : json(nullptr);
      j["source"] = source;
      return j.dump() + "\n";
    }
    case Format::kCsv:
      return Csv({"expression", "relation", "source"},
                 {{std::string(expression), rel, source}});
    case Format::kText:
      return rel + "\n";
  }
  return {};
}

}  // namespace signalscope
