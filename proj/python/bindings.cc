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

// Python module signalscope._core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "signalscope/cli.h"
#include "signalscope/corpus.h"
#include "signalscope/error.h"
#include "signalscope/lint.h"
#include "signalscope/parser.h"
#include "signalscope/predictor.h"
#include "signalscope/rules.h"
#include "signalscope/stats.h"
#include "signalscope/validate.h"

namespace py = pybind11;

namespace signalscope {
namespace {

PosSource ParsePosSource(const std::string &name) {
  if (name == "sidecar") return PosSource::kSidecar;
  if (name == "fallback") return PosSource::kFallback;
  if (name == "mixed") return PosSource::kSidecarWithFallback;
  throw py::value_error("pos source must be sidecar, fallback or mixed");
}

RelType RelFromName(const std::string &name) {
  auto rel = ParseRelType(name);
  if (!rel) throw py::value_error("unknown relation " + name);
  return *rel;
}

py::dict Usage(const UsageSummary &u) {
  py::dict d;
  d["n_signals"] = u.n_signals;
  d["n_used_by_tlink"] = u.n_used_by_tlink;
  d["n_used_by_alink"] = u.n_used_by_alink;
  d["n_used_by_slink"] = u.n_used_by_slink;
  d["n_tlinks_with_signal"] = u.n_tlinks_with_signal;
  d["n_signals_multi_tlink"] = u.n_signals_multi_tlink;
  return d;
}

py::list Issues(const std::vector<ValidationIssue> &issues) {
  py::list out;
  for (const ValidationIssue &i : issues) {
    py::dict d;
    d["doc_id"] = i.doc_id;
    d["element_id"] = i.element_id;
    d["kind"] = std::string(ToString(i.kind));
    d["message"] = i.message;
    out.append(d);
  }
  return out;
}

py::dict Link(const TLink &l) {
  py::dict d;
  d["lid"] = l.lid;
  d["rel"] = std::string(ToString(l.rel));
  d["source"] = l.source.id;
  d["target"] = l.target.id;
  d["signal"] = l.signal ? py::cast(*l.signal) : py::none();
  return d;
}

}  // namespace
}  // namespace signalscope

PYBIND11_MODULE(_core, m) {
  using namespace signalscope;
  m.doc() = "TimeML signal profiling, disambiguation and relation prediction";

  py::register_exception<Error>(m, "SignalScopeError");

  py::class_<Document>(m, "Document")
      .def_readonly("doc_id", &Document::doc_id)
      .def_readonly("text", &Document::text)
      .def_property_readonly("tokens",
                             [](const Document &d) {
                               std::vector<std::string> out;
                               for (const Token &t : d.tokens) out.push_back(t.surface);
                               return out;
                             })
      .def_property_readonly("signals",
                             [](const Document &d) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Signal &s : d.signals) out.emplace_back(s.sid, s.surface);
                               return out;
                             })
      .def_property_readonly("tlinks",
                             [](const Document &d) {
                               py::list out;
                               for (const TLink &l : d.tlinks) out.append(Link(l));
                               return out;
                             })
      .def_property_readonly("event_count", [](const Document &d) { return d.events.size(); })
      .def_property_readonly("timex_count", [](const Document &d) { return d.timexes.size(); })
      .def("serialize", &SerializeTimeml)
      .def("validate",
           [](const Document &d) {
             ValidationReport r = ValidateDocument(d);
             py::dict out;
             out["errors"] = Issues(r.errors);
             out["warnings"] = Issues(r.warnings);
             return out;
           })
      .def("attach_pos", &AttachPosSidecar, py::arg("sidecar"))
      .def("__eq__", [](const Document &a, const Document &b) { return a == b; });

  m.def("parse",
        [](const std::string &xml, const std::string &doc_id) {
          return ParseTimeml(xml, doc_id).document;
        },
        py::arg("xml"), py::arg("doc_id") = "");

  py::class_<Corpus>(m, "Corpus")
      .def_readonly("label", &Corpus::label)
      .def("__len__", [](const Corpus &c) { return c.documents.size(); })
      .def_property_readonly("doc_ids", [](const Corpus &c) {
        std::vector<std::string> out;
        for (const Document &d : c.documents) out.push_back(d.doc_id);
        return out;
      });

  m.def("load_corpus",
        [](const std::vector<std::string> &paths, std::optional<std::string> pos_dir,
           const std::string &label, int jobs) {
          LoadOptions o;
          o.label = label;
          o.pos_dir = std::move(pos_dir);
          o.jobs = jobs;
          py::gil_scoped_release release;
          return LoadCorpus(paths, o).corpus;
        },
        py::arg("paths"), py::arg("pos_dir") = py::none(), py::arg("label") = "corpus",
        py::arg("jobs") = 1);

  m.def("usage_summary", [](const Corpus &c) { return Usage(SignalUsageSummary(c)); });
  m.def("tlinks_per_signal",
        [](const Corpus &c) { return TlinksPerSignalHistogram(c).counts; });
  m.def("signal_pos",
        [](const Corpus &c, const std::string &source) {
          return SignalPosDistribution(c, ParsePosSource(source)).frequency;
        },
        py::arg("corpus"), py::arg("source") = "sidecar");
  m.def("ambiguity_table", [](const Corpus &c) {
    std::vector<std::tuple<std::string, std::int64_t, std::int64_t, double>> out;
    for (const AmbiguityRow &r : ExpressionAmbiguityTable(c, CandidateLexicon::Default())) {
      out.emplace_back(r.expression, r.count_in_corpus, r.count_as_signal, r.proportion());
    }
    return out;
  });

  m.def("fold_relation",
        [](const std::string &rel, bool swap) {
          CanonicalRelation c = FoldRelation(RelFromName(rel), swap);
          return std::make_pair(std::string(ToString(c.value)), c.swapped);
        },
        py::arg("rel"), py::arg("swap_args") = false);

  py::class_<RelationMatrix>(m, "RelationMatrix")
      .def_property_readonly("canonical", &RelationMatrix::canonical)
      .def("count", [](const RelationMatrix &mx, const std::string &e,
                       const std::string &r) { return mx.Count(e, RelFromName(r)); })
      .def("total", &RelationMatrix::Total)
      .def("predict",
           [](const RelationMatrix &mx, const std::string &expr,
              std::optional<std::string> fallback) -> std::optional<std::string> {
             std::optional<RelType> fb;
             if (fallback) fb = RelFromName(*fallback);
             Prediction p = Predict(mx, expr, fb);
             if (!p.relation) return std::nullopt;
             return std::string(ToString(*p.relation));
           },
           py::arg("expression"), py::arg("fallback") = py::none())
      .def("to_json", &RelationMatrix::ToJson)
      .def_static("from_json", &RelationMatrix::FromJson);

  m.def("train", [](const Corpus &c, bool canonical) { return TrainMatrix(c, canonical); },
        py::arg("corpus"), py::arg("canonical") = false);

  m.def("evaluate",
        [](const Corpus &c, const std::string &protocol, bool canonical) {
          Protocol p = protocol == "lodo" ? Protocol::kLeaveOneDocumentOut
                                          : Protocol::kResubstitution;
          EvaluationResult r = Evaluate(p, c, canonical, &CandidateLexicon::Default());
          py::dict out;
          out["correct"] = r.overall.correct;
          out["total"] = r.overall.total;
          out["accuracy"] = r.overall.accuracy();
          py::dict per;
          for (const auto &[e, a] : r.per_expression) per[py::str(e)] = a.accuracy();
          out["per_expression"] = per;
          return out;
        },
        py::arg("corpus"), py::arg("protocol") = "resub", py::arg("canonical") = false);

  m.def("disambiguate", [](const Document &doc) {
    SignalRules rules(CandidateLexicon::Default());
    py::list out;
    for (const Occurrence &occ : FindOccurrences(doc, rules.lexicon())) {
      SenseLabel label = rules.Classify(occ);
      py::dict d;
      d["expression"] = occ.expression;
      d["token_begin"] = occ.range.begin;
      d["token_end"] = occ.range.end;
      d["label"] = std::string(ToString(label.value));
      d["rationale"] = label.rationale;
      out.append(d);
    }
    return out;
  });

  m.def("lint", [](const Corpus &c) {
    SignalRules rules(CandidateLexicon::Default());
    py::list out;
    for (const CurationSuggestion &s : LintCorpus(c, rules, {})) {
      py::dict d;
      d["doc_id"] = s.occurrence.doc_id;
      d["expression"] = s.occurrence.expression;
      d["proposed"] = std::string(ToString(s.proposed));
      d["suggested_relation"] = s.suggested_relation
                                    ? py::cast(std::string(ToString(*s.suggested_relation)))
                                    : py::none();
      d["confidence"] = std::string(ToString(s.confidence));
      out.append(d);
    }
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::Run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
