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

#include "signalscope/validate.h"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "signalscope/error.h"

namespace signalscope {

namespace {

constexpr std::array<std::string_view, 14> kIssueNames = {
    "EmptyId",
    "DuplicateId",
    "TokenOrder",
    "SpanOutOfBounds",
    "SpanMisaligned",
    "EmptySignal",
    "SignalSurfaceMismatch",
    "MissingDct",
    "MultipleDct",
    "DanglingEventRef",
    "DanglingEntityRef",
    "DanglingSignalRef",
    "SelfLink",
    "UnusedSignal",
};

class Validator {
 public:
  explicit Validator(const Document &doc) : doc_(doc) {}

  ValidationReport Run() {
    CheckTokens();
    CheckIds();
    for (const Event &e : doc_.events) CheckSpan(e.eid, e.chars, e.span);
    for (const Timex3 &t : doc_.timexes) CheckSpan(t.tid, t.chars, t.span);
    for (const Signal &s : doc_.signals) {
      if (!CheckSpan(s.sid, s.chars, s.span)) continue;
      if (s.span.empty()) {
        Error(s.sid, IssueKind::kEmptySignal, "signal covers no token");
      } else if (s.surface != NormalizedSurface(doc_.tokens, s.span)) {
        Error(s.sid, IssueKind::kSignalSurfaceMismatch,
              "surface \"" + s.surface + "\" does not match tokens \"" +
                  NormalizedSurface(doc_.tokens, s.span) + "\"");
      }
    }
    CheckDct();
    for (const EventInstance &in : doc_.instances) {
      if (doc_.FindEvent(in.event_id) == nullptr) {
        Error(in.eiid, IssueKind::kDanglingEventRef,
              "instance cites missing event " + in.event_id);
      }
    }
    std::unordered_set<std::string> cited;
    for (const TLink &l : doc_.tlinks) {
      CheckLink(l.lid, l.source, l.target, l.signal, &cited);
    }
    for (const auto *links : {&doc_.slinks, &doc_.alinks}) {
      for (const UntypedLink &l : *links) {
        CheckLink(l.lid, l.source, l.target, l.signal, &cited);
      }
    }
    for (const Signal &s : doc_.signals) {
      if (!cited.contains(s.sid)) {
        report_.warnings.push_back({doc_.doc_id, s.sid,
                                    IssueKind::kUnusedSignal,
                                    "signal is not cited by any link"});
      }
    }
    return std::move(report_);
  }

 private:
  void Error(const std::string &id, IssueKind kind, std::string message) {
    report_.errors.push_back({doc_.doc_id, id, kind, std::move(message)});
  }

  void CheckTokens() {
    for (std::size_t i = 0; i < doc_.tokens.size(); ++i) {
      const Token &t = doc_.tokens[i];
      bool bad = t.index != i || t.char_begin >= t.char_end ||
                 t.char_end > doc_.text.size() ||
                 (i > 0 && t.char_begin < doc_.tokens[i - 1].char_end);
      if (bad) {
        Error("token:" + std::to_string(i), IssueKind::kTokenOrder,
              "token offsets must be increasing and non-overlapping");
      }
    }
  }

  template <typename Items, typename Member>
  void CheckUnique(const Items &items, Member member, const char *what,
                   std::unordered_set<std::string> *seen) {
    for (const auto &item : items) {
      const std::string &id = item.*member;
      if (id.empty()) {
        Error(id, IssueKind::kEmptyId, std::string(what) + " without id");
      } else if (!seen->insert(id).second) {
        Error(id, IssueKind::kDuplicateId,
              std::string("duplicate ") + what + " id " + id);
      }
    }
  }

  void CheckIds() {
    std::unordered_set<std::string> eids, eiids, tids, sids, lids;
    CheckUnique(doc_.events, &Event::eid, "eid", &eids);
    CheckUnique(doc_.instances, &EventInstance::eiid, "eiid", &eiids);
    CheckUnique(doc_.timexes, &Timex3::tid, "tid", &tids);
    CheckUnique(doc_.signals, &Signal::sid, "sid", &sids);
    CheckUnique(doc_.tlinks, &TLink::lid, "lid", &lids);
    CheckUnique(doc_.slinks, &UntypedLink::lid, "lid", &lids);
    CheckUnique(doc_.alinks, &UntypedLink::lid, "lid", &lids);
  }

  // Returns false when the span is unusable for further checks.
  bool CheckSpan(const std::string &id, CharSpan chars, TokenRange span) {
    if (chars.begin > chars.end || chars.end > doc_.text.size() ||
        span.end > doc_.tokens.size() || span.begin > span.end) {
      Error(id, IssueKind::kSpanOutOfBounds, "span lies outside the text");
      return false;
    }
    // Every token touching the span must lie wholly inside it, and the
    // token range must be exactly those tokens.
    TokenRange expected = CoveringTokens(doc_.tokens, chars);
    bool straddles = false;
    for (const Token &t : doc_.tokens) {
      if (t.char_end <= chars.begin || t.char_begin >= chars.end) continue;
      if (t.char_begin < chars.begin || t.char_end > chars.end) {
        straddles = true;
        break;
      }
    }
    if (straddles || !(expected == span)) {
      Error(id, IssueKind::kSpanMisaligned,
            "span does not align with token boundaries");
    }
    return true;
  }

  void CheckDct() {
    std::size_t n = std::count_if(
        doc_.timexes.begin(), doc_.timexes.end(),
        [](const Timex3 &t) { return t.IsCreationTime(); });
    if (n == 0) {
      Error(doc_.doc_id, IssueKind::kMissingDct,
            "no TIMEX3 has functionInDocument=CREATION_TIME");
    } else if (n > 1) {
      Error(doc_.doc_id, IssueKind::kMultipleDct,
            std::to_string(n) + " timexes are marked as creation time");
    }
  }

  bool Resolves(const EntityRef &ref) const {
    switch (ref.kind) {
      case EntityRef::Kind::kEventInstance: {
        const EventInstance *in = doc_.FindInstance(ref.id);
        return in != nullptr && doc_.FindEvent(in->event_id) != nullptr;
      }
      case EntityRef::Kind::kEvent:
        return doc_.FindEvent(ref.id) != nullptr;
      case EntityRef::Kind::kTimex:
        return doc_.FindTimex(ref.id) != nullptr;
    }
    return false;
  }

  void CheckLink(const std::string &lid, const EntityRef &source,
                 const EntityRef &target,
                 const std::optional<std::string> &signal,
                 std::unordered_set<std::string> *cited) {
    // One error per dangling argument; an instance whose event is missing is
    // already reported against the instance.
    for (const EntityRef *ref : {&source, &target}) {
      bool instance_exists = ref->kind == EntityRef::Kind::kEventInstance &&
                             doc_.FindInstance(ref->id) != nullptr;
      if (!instance_exists && !Resolves(*ref)) {
        Error(lid, IssueKind::kDanglingEntityRef,
              "link cites missing entity " + ref->id);
      }
    }
    if (source == target) {
      Error(lid, IssueKind::kSelfLink, "link relates " + source.id +
                                           " to itself");
    }
    if (signal) {
      if (doc_.FindSignal(*signal) == nullptr) {
        Error(lid, IssueKind::kDanglingSignalRef,
              "link cites missing signal " + *signal);
      } else {
        cited->insert(*signal);
      }
    }
  }

  const Document &doc_;
  ValidationReport report_;
};

bool IsDurationNear(const Timex3 &t, const TokenRange &head) {
  if (t.type != TimexType::kDuration || t.span.empty()) return false;
  // The timex must end before the head, at most two tokens away.
  return t.span.end <= head.begin && head.begin - (t.span.end - 1) <= 2;
}

}  // namespace

std::string_view ToString(IssueKind kind) {
  return kIssueNames[static_cast<std::size_t>(kind)];
}

ValidationReport ValidateDocument(const Document &doc) {
  return Validator(doc).Run();
}

Entity ResolveEntity(const Document &doc, const EntityRef &ref) {
  switch (ref.kind) {
    case EntityRef::Kind::kEventInstance: {
      const EventInstance *in = doc.FindInstance(ref.id);
      if (in == nullptr) throw ResolveError(ref.id);
      const Event *e = doc.FindEvent(in->event_id);
      if (e == nullptr) throw ResolveError(in->event_id);
      return std::cref(*e);
    }
    case EntityRef::Kind::kEvent: {
      const Event *e = doc.FindEvent(ref.id);
      if (e == nullptr) throw ResolveError(ref.id);
      return std::cref(*e);
    }
    case EntityRef::Kind::kTimex: {
      const Timex3 *t = doc.FindTimex(ref.id);
      if (t == nullptr) throw ResolveError(ref.id);
      return std::cref(*t);
    }
  }
  throw ResolveError(ref.id);
}

std::pair<Entity, Entity> ResolveLinkEntities(const Document &doc,
                                              const TLink &link) {
  if (link.signal && doc.FindSignal(*link.signal) == nullptr) {
    throw ResolveError(*link.signal);
  }
  return {ResolveEntity(doc, link.source), ResolveEntity(doc, link.target)};
}

std::pair<Entity, Entity> ResolveLinkEntities(const Document &doc,
                                              const UntypedLink &link) {
  if (link.signal && doc.FindSignal(*link.signal) == nullptr) {
    throw ResolveError(*link.signal);
  }
  return {ResolveEntity(doc, link.source), ResolveEntity(doc, link.target)};
}

bool IsQualitativeQualifier(std::string_view w) {
  static const std::unordered_set<std::string_view> words = {
      "very",     "shortly",  "soon",     "long",     "just",
      "immediately", "right", "well",     "even",     "only",
      "much",     "far",      "briefly",  "directly", "slightly",
      "quickly",  "little",   "not",      "almost",   "nearly",
      "sometime", "somewhat", "closely",  "swiftly",  "promptly",
      "way",
  };
  return words.contains(w);
}

SignalStructure ExtractSignalStructure(const Document &doc, const Signal &sig) {
  SignalStructure out;
  out.signal_id = sig.sid;
  out.head = sig.span;
  if (sig.span.empty()) {
    // Degenerate input; the head stays the (empty) annotated span.
    return out;
  }
  // Leading qualitative words inside the span; at least one head token stays.
  std::size_t head_begin = sig.span.begin;
  while (head_begin + 1 < sig.span.end &&
         head_begin < doc.tokens.size() &&
         IsQualitativeQualifier(Lowercase(doc.tokens[head_begin].surface))) {
    ++head_begin;
  }
  if (head_begin > sig.span.begin) {
    out.head = {head_begin, sig.span.end};
    out.qualifier = SignalStructure::Qualifier{
        SignalStructure::Qualifier::Kind::kQualitative,
        {sig.span.begin, head_begin},
        {}};
    return out;
  }
  const Timex3 *best = nullptr;
  for (const Timex3 &t : doc.timexes) {
    if (!IsDurationNear(t, out.head)) continue;
    if (best == nullptr || t.span.end > best->span.end) best = &t;
  }
  if (best != nullptr) {
    out.qualifier = SignalStructure::Qualifier{
        SignalStructure::Qualifier::Kind::kDuration, best->span, best->tid};
  }
  return out;
}

}  // namespace signalscope
