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

// Rule order per set (first match wins):
//
//   previously  always                  -> TEMPORAL_SIGNAL
//   after       positional              -> NON_TEMPORAL
//               default                 -> TEMPORAL_SIGNAL
//   when        negated-report          -> NON_TEMPORAL
//               context-setting         -> NON_TEMPORAL
//               default                 -> TEMPORAL_SIGNAL
//   while       nominal ("a while")     -> TEMPORAL_EXPRESSION
//               contrastive             -> NON_TEMPORAL
//               default                 -> TEMPORAL_SIGNAL
//   before      logical ("before taxes")-> NON_TEMPORAL
//               spatial                 -> NON_TEMPORAL
//               np-or-clause            -> TEMPORAL_SIGNAL
//               duration-qualified      -> TEMPORAL_SIGNAL
//               no-complement           -> NON_TEMPORAL
//   until       always                  -> TEMPORAL_SIGNAL
//   already     emphasis                -> EMPHASIS_ONLY
//   meanwhile   concessive              -> NON_TEMPORAL
//               dct-anchored|anaphoric  -> TEMPORAL_SIGNAL
//   again       recurrence              -> NON_TEMPORAL
//   former      noun-phrase             -> TEMPORAL_SIGNAL
//               not-attributive         -> NON_TEMPORAL
//   recently    comparative|default     -> TEMPORAL_EXPRESSION
//   generic     licensed                -> TEMPORAL_SIGNAL
//               unlicensed              -> NON_TEMPORAL

#include "signalscope/rules.h"

#include <algorithm>
#include <unordered_map>

#include <json.hpp>

#include "signalscope/error.h"
#include "signalscope/predictor.h"
#include "signalscope/tokenizer.h"

namespace signalscope {

namespace {

constexpr std::size_t kWindow = 5;

bool IsClauseDelimiter(std::string_view t) {
  return t == "," || t == ";" || t == ":";
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool IsNounTag(std::string_view pos) { return StartsWith(pos, "NN"); }

bool IsVerbTag(std::string_view pos) {
  return StartsWith(pos, "VB") || pos == "MD";
}

bool IsPunctuation(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c));
  });
}

// Reads from the end: at(v, 1) is the last element.
const ContextToken *FromEnd(const std::vector<ContextToken> &v, std::size_t k) {
  return k >= 1 && k <= v.size() ? &v[v.size() - k] : nullptr;
}

const ContextToken *At(const std::vector<ContextToken> &v, std::size_t k) {
  return k < v.size() ? &v[k] : nullptr;
}

SenseLabel Label(Sense sense, std::string rationale) {
  return SenseLabel{sense, std::move(rationale)};
}

std::set<std::string> Words(std::initializer_list<const char *> words) {
  return std::set<std::string>(words.begin(), words.end());
}

}  // namespace

std::string_view ToString(Sense sense) {
  switch (sense) {
    case Sense::kTemporalSignal: return "TEMPORAL_SIGNAL";
    case Sense::kTemporalExpression: return "TEMPORAL_EXPRESSION";
    case Sense::kEmphasisOnly: return "EMPHASIS_ONLY";
    case Sense::kNonTemporal: return "NON_TEMPORAL";
  }
  return "NON_TEMPORAL";
}

std::string_view ToString(Confidence confidence) {
  switch (confidence) {
    case Confidence::kHigh: return "HIGH";
    case Confidence::kMedium: return "MEDIUM";
    case Confidence::kLow: return "LOW";
  }
  return "LOW";
}

// ---------------------------------------------------------------------------
// Configuration.

RuleConfig RuleConfig::Defaults() {
  RuleConfig c;
  c.motion_verbs = Words({"go", "goes", "went", "going", "gone", "come",
                          "comes", "came", "coming", "chase", "chases",
                          "chased", "chasing", "run", "runs", "ran", "running",
                          "look", "looks", "looked", "looking", "named",
                          "name", "names", "naming"});
  c.institutions =
      Words({"council", "court", "judge", "committee", "congress", "board"});
  c.logical_objects = Words({"taxes", "tax"});
  c.reporting_verbs = Words({"say", "said", "says", "saying", "tell", "told",
                             "disclose", "disclosed", "reveal", "revealed",
                             "indicate", "indicated", "specify", "specified",
                             "know", "knew", "explain", "explained",
                             "announce", "announced", "confirm", "confirmed",
                             "comment", "commented", "predict", "predicted"});
  c.negations = Words({"not", "n't", "never", "no"});
  c.stative_verbs = Words({"be", "is", "are", "was", "were", "been", "being",
                           "am", "'s", "'re", "have", "has", "had", "seem",
                           "seems", "seemed", "remain", "remains", "remained",
                           "see", "sees", "believe", "believes", "believed",
                           "know", "knows", "own", "owns", "want", "wants",
                           "need", "needs", "appear", "appears", "consider",
                           "considers", "feel", "feels", "hold", "holds"});
  c.contrast_openers = Words({"but", "and"});
  c.comparatives = Words({"more", "less", "most", "least"});
  c.context_setting = {{"it", "came", "to"},
                       {"it", "come", "to"},
                       {"it", "comes", "to"},
                       {"it", "coming", "to"}};
  return c;
}

RuleConfig RuleConfig::FromJson(std::string_view text) {
  using json = nlohmann::json;
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(std::string("rule config: ") + e.what());
  }
  if (!in.is_object()) throw Error("rule config: expected an object");
  RuleConfig c = Defaults();
  auto read_set = [](const json &v, const std::string &key) {
    if (!v.is_array()) throw Error("rule config: " + key + " must be a list");
    std::set<std::string> out;
    for (const json &w : v) {
      if (!w.is_string()) throw Error("rule config: " + key + " holds a non-string");
      out.insert(NormalizeExpression(w.get<std::string>()));
    }
    return out;
  };
  for (const auto &[key, value] : in.items()) {
    if (key == "motion_verbs") {
      c.motion_verbs = read_set(value, key);
    } else if (key == "institutions") {
      c.institutions = read_set(value, key);
    } else if (key == "logical_objects") {
      c.logical_objects = read_set(value, key);
    } else if (key == "reporting_verbs") {
      c.reporting_verbs = read_set(value, key);
    } else if (key == "negations") {
      c.negations = read_set(value, key);
    } else if (key == "stative_verbs") {
      c.stative_verbs = read_set(value, key);
    } else if (key == "contrast_openers") {
      c.contrast_openers = read_set(value, key);
    } else if (key == "comparatives") {
      c.comparatives = read_set(value, key);
    } else if (key == "context_setting") {
      c.context_setting.clear();
      for (const std::string &phrase : read_set(value, key)) {
        std::vector<std::string> words;
        std::size_t start = 0;
        while (start <= phrase.size()) {
          std::size_t sp = phrase.find(' ', start);
          if (sp == std::string::npos) sp = phrase.size();
          words.push_back(phrase.substr(start, sp - start));
          start = sp + 1;
        }
        c.context_setting.push_back(std::move(words));
      }
    } else {
      throw Error("rule config: unknown key " + key);
    }
  }
  return c;
}

std::string RuleConfig::ToJson() const {
  nlohmann::ordered_json out;
  out["motion_verbs"] = motion_verbs;
  out["institutions"] = institutions;
  out["logical_objects"] = logical_objects;
  out["reporting_verbs"] = reporting_verbs;
  out["negations"] = negations;
  out["stative_verbs"] = stative_verbs;
  out["contrast_openers"] = contrast_openers;
  out["comparatives"] = comparatives;
  std::vector<std::string> phrases;
  for (const auto &words : context_setting) {
    std::string p;
    for (const std::string &w : words) p += (p.empty() ? "" : " ") + w;
    phrases.push_back(p);
  }
  out["context_setting"] = phrases;
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Occurrence extraction.

std::vector<Occurrence> FindOccurrences(const Document &doc,
                                        const CandidateLexicon &lexicon,
                                        PosSource pos_source) {
  const std::size_t n = doc.tokens.size();
  std::vector<std::size_t> sentence = SentenceIds(doc);

  std::unordered_map<std::string, std::string> tense_by_event;
  for (const EventInstance &in : doc.instances) {
    tense_by_event.emplace(in.event_id, in.tense);
  }
  std::vector<ContextToken> ctx(n);
  for (std::size_t i = 0; i < n; ++i) {
    ctx[i].text = Lowercase(doc.tokens[i].surface);
    ctx[i].pos = TokenTag(doc, i, pos_source).value_or("");
    ctx[i].past = ctx[i].pos == "VBD" || ctx[i].pos == "VBN";
  }
  for (const Event &e : doc.events) {
    auto tense = tense_by_event.find(e.eid);
    bool past = tense != tense_by_event.end() && tense->second == "PAST";
    for (std::size_t i = e.span.begin; i < e.span.end && i < n; ++i) {
      ctx[i].in_event = true;
      ctx[i].event_class = e.event_class;
      ctx[i].past = ctx[i].past || past;
    }
  }
  for (const Timex3 &t : doc.timexes) {
    for (std::size_t i = t.span.begin; i < t.span.end && i < n; ++i) {
      ctx[i].in_timex = true;
    }
  }
  auto anchored = [&](std::size_t i) {
    return ctx[i].in_event || ctx[i].in_timex;
  };

  std::vector<Occurrence> out;
  for (const ExpressionMatch &m : lexicon.Match(doc.tokens)) {
    Occurrence occ;
    occ.doc_id = doc.doc_id;
    occ.range = m.range;
    occ.chars = {doc.tokens[m.range.begin].char_begin,
                 doc.tokens[m.range.end - 1].char_end};
    occ.expression = m.entry->expression;
    occ.pos = ctx[m.range.begin].pos;

    const std::size_t sid = sentence[m.range.begin];
    std::size_t sent_begin = m.range.begin;
    while (sent_begin > 0 && sentence[sent_begin - 1] == sid) --sent_begin;
    std::size_t sent_end = m.range.end;
    while (sent_end < n && sentence[sent_end] == sid) ++sent_end;

    std::size_t left_begin =
        std::max(sent_begin, m.range.begin >= kWindow ? m.range.begin - kWindow
                                                      : std::size_t{0});
    for (std::size_t i = left_begin; i < m.range.begin; ++i) {
      occ.left.push_back(ctx[i]);
    }
    for (std::size_t i = m.range.end; i < sent_end && i < m.range.end + kWindow;
         ++i) {
      occ.right.push_back(ctx[i]);
    }
    occ.sentence_initial = m.range.begin == sent_begin;
    occ.clause_initial = occ.sentence_initial;
    if (!occ.left.empty()) {
      const std::string &prev = occ.left.back().text;
      occ.clause_initial = IsClauseDelimiter(prev) || prev == "but" ||
                           prev == "and";
    }
    occ.next_pos = occ.right.empty() ? "" : occ.right.front().pos;
    for (std::size_t k = 1; k <= 3; ++k) {
      const ContextToken *t = FromEnd(occ.left, k);
      if (t != nullptr && (t->text == "not" || t->text == "n't" ||
                           t->text == "never" || t->text == "no")) {
        occ.negation_before = true;
      }
    }
    for (std::size_t i = sent_begin; i < m.range.begin; ++i) {
      occ.event_or_timex_left = occ.event_or_timex_left || anchored(i);
    }
    for (std::size_t i = m.range.end; i < sent_end; ++i) {
      occ.event_or_timex_right = occ.event_or_timex_right || anchored(i);
    }

    std::size_t i = m.range.end;
    for (; i < sent_end && !IsClauseDelimiter(ctx[i].text); ++i) {
      occ.clause_after.push_back(ctx[i]);
    }
    if (occ.clause_initial) {
      for (++i; i < sent_end; ++i) occ.clause_other.push_back(ctx[i]);
    } else {
      for (std::size_t j = sent_begin; j < m.range.begin; ++j) {
        occ.clause_other.push_back(ctx[j]);
      }
    }

    for (const Signal &s : doc.signals) {
      if (s.span.Overlaps(m.range)) {
        occ.covering_signal = s.sid;
        break;
      }
    }
    for (const Timex3 &t : doc.timexes) {
      if (t.span.Overlaps(m.range)) {
        occ.inside_timex = true;
        break;
      }
    }
    out.push_back(std::move(occ));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification.

SignalRules::SignalRules(const CandidateLexicon &lexicon, RuleConfig config)
    : lexicon_(&lexicon), config_(std::move(config)) {}

const LexiconEntry &SignalRules::EntryFor(const Occurrence &occ) const {
  const LexiconEntry *e = lexicon_->Find(occ.expression);
  if (e == nullptr) throw UnknownExpressionError(occ.expression);
  return *e;
}

SenseLabel SignalRules::Classify(const Occurrence &occ) const {
  switch (EntryFor(occ).rule) {
    case RuleId::kPreviously:
      return Label(Sense::kTemporalSignal, "previously/always");
    case RuleId::kAfter: return After(occ);
    case RuleId::kWhen: return When(occ);
    case RuleId::kWhile: return While(occ);
    case RuleId::kBefore: return Before(occ);
    case RuleId::kUntil:
      return Label(Sense::kTemporalSignal, "until/always");
    case RuleId::kAlready:
      return Label(Sense::kEmphasisOnly, "already/emphasis");
    case RuleId::kMeanwhile: return Meanwhile(occ);
    case RuleId::kAgain:
      return Label(Sense::kNonTemporal, "again/recurrence");
    case RuleId::kFormer: return Former(occ);
    case RuleId::kRecently: return Recently(occ);
    case RuleId::kGeneric: return Generic(occ);
  }
  return Generic(occ);
}

SenseLabel SignalRules::After(const Occurrence &occ) const {
  for (std::size_t k = 1; k <= 2; ++k) {
    const ContextToken *t = FromEnd(occ.left, k);
    if (t != nullptr && config_.motion_verbs.contains(t->text)) {
      return Label(Sense::kNonTemporal, "after/positional");
    }
  }
  return Label(Sense::kTemporalSignal, "after/default");
}

SenseLabel SignalRules::When(const Occurrence &occ) const {
  for (std::size_t d = 1; d <= 3; ++d) {
    const ContextToken *verb = FromEnd(occ.left, d);
    if (verb == nullptr || !config_.reporting_verbs.contains(verb->text)) {
      continue;
    }
    for (std::size_t k = d + 1; k <= d + 3; ++k) {
      const ContextToken *t = FromEnd(occ.left, k);
      if (t != nullptr && config_.negations.contains(t->text)) {
        return Label(Sense::kNonTemporal, "when/negated-report");
      }
    }
  }
  for (const auto &phrase : config_.context_setting) {
    bool match = phrase.size() <= occ.right.size();
    for (std::size_t k = 0; match && k < phrase.size(); ++k) {
      match = occ.right[k].text == phrase[k];
    }
    if (match && !phrase.empty()) {
      return Label(Sense::kNonTemporal, "when/context-setting");
    }
  }
  return Label(Sense::kTemporalSignal, "when/default");
}

bool SignalRules::Stative(const std::vector<ContextToken> &clause) const {
  for (const ContextToken &t : clause) {
    if (config_.stative_verbs.contains(t.text)) return true;
    if (t.event_class == EventClass::kState ||
        t.event_class == EventClass::kIState) {
      return true;
    }
  }
  return false;
}

SenseLabel SignalRules::While(const Occurrence &occ) const {
  const ContextToken *prev = FromEnd(occ.left, 1);
  if (prev != nullptr && prev->text == "a") {
    return Label(Sense::kTemporalExpression, "while/nominal");
  }
  bool contrast_position =
      occ.sentence_initial ||
      (prev != nullptr && config_.contrast_openers.contains(prev->text));
  if (contrast_position && Stative(occ.clause_after) &&
      Stative(occ.clause_other)) {
    return Label(Sense::kNonTemporal, "while/contrastive");
  }
  return Label(Sense::kTemporalSignal, "while/default");
}

SenseLabel SignalRules::Before(const Occurrence &occ) const {
  const ContextToken *next = At(occ.right, 0);
  if (next != nullptr && config_.logical_objects.contains(next->text)) {
    return Label(Sense::kNonTemporal, "before/logical");
  }
  // Walk the noun phrase that follows; an institution heading it, with no
  // verb after it, marks the spatial "go before the council" sense.
  bool institution = false;
  std::size_t k = 0;
  for (; k < occ.right.size(); ++k) {
    const ContextToken &t = occ.right[k];
    bool np_token = t.pos == "DT" || IsNounTag(t.pos) ||
                    StartsWith(t.pos, "JJ") || t.pos == "POS";
    if (!np_token) break;
    institution = institution || config_.institutions.contains(t.text);
  }
  if (institution) {
    const ContextToken *after_np = At(occ.right, k);
    if (after_np == nullptr || !IsVerbTag(after_np->pos)) {
      return Label(Sense::kNonTemporal, "before/spatial");
    }
  }
  if (next != nullptr && !IsPunctuation(next->text)) {
    std::string_view p = next->pos;
    bool complement = StartsWith(p, "DT") || StartsWith(p, "PRP") ||
                      StartsWith(p, "NN") || StartsWith(p, "JJ") ||
                      p == "CD" || p == "VBG" || p == "PDT" || p == "EX" ||
                      StartsWith(p, "W") || next->in_event || next->in_timex;
    if (complement) return Label(Sense::kTemporalSignal, "before/np-or-clause");
  }
  const ContextToken *prev = FromEnd(occ.left, 1);
  if (prev != nullptr && prev->in_timex) {
    return Label(Sense::kTemporalSignal, "before/duration-qualified");
  }
  return Label(Sense::kNonTemporal, "before/no-complement");
}

SenseLabel SignalRules::Meanwhile(const Occurrence &occ) const {
  const ContextToken *next = At(occ.right, 0);
  if (next != nullptr && next->text == "," && occ.clause_initial) {
    bool past = std::any_of(occ.clause_other.begin(), occ.clause_other.end(),
                            [](const ContextToken &t) { return t.past; });
    if (!past) return Label(Sense::kNonTemporal, "meanwhile/concessive");
  }
  if (!occ.event_or_timex_left) {
    return Label(Sense::kTemporalSignal, "meanwhile/dct-anchored");
  }
  return Label(Sense::kTemporalSignal, "meanwhile/anaphoric");
}

SenseLabel SignalRules::Former(const Occurrence &occ) const {
  const ContextToken *next = At(occ.right, 0);
  const ContextToken *after = At(occ.right, 1);
  auto nominal = [](const ContextToken *t) {
    return t != nullptr &&
           (IsNounTag(t->pos) || t->event_class == EventClass::kState);
  };
  if (nominal(next) ||
      (next != nullptr && StartsWith(next->pos, "JJ") && nominal(after))) {
    return Label(Sense::kTemporalSignal, "former/noun-phrase");
  }
  return Label(Sense::kNonTemporal, "former/not-attributive");
}

SenseLabel SignalRules::Recently(const Occurrence &occ) const {
  const ContextToken *prev = FromEnd(occ.left, 1);
  if (prev != nullptr && config_.comparatives.contains(prev->text)) {
    return Label(Sense::kTemporalExpression, "recently/comparative");
  }
  return Label(Sense::kTemporalExpression, "recently/default");
}

SenseLabel SignalRules::Generic(const Occurrence &occ) const {
  bool relational_pos = occ.pos == "IN" || occ.pos == "RB" || occ.pos == "WRB";
  if (relational_pos && occ.event_or_timex_left && occ.event_or_timex_right) {
    return Label(Sense::kTemporalSignal, "generic/licensed");
  }
  return Label(Sense::kNonTemporal, "generic/unlicensed");
}

std::optional<RelationSuggestion> SignalRules::SuggestRelation(
    const Occurrence &occ, const SenseLabel &label, ArgOrder order,
    const RelationMatrix *matrix) const {
  if (label.value != Sense::kTemporalSignal) {
    throw ContractError("relation suggested for a " +
                        std::string(ToString(label.value)) + " occurrence");
  }
  const LexiconEntry &entry = EntryFor(occ);
  std::optional<RelationSuggestion> s;
  switch (entry.rule) {
    case RuleId::kUntil: {
      // "not until", "will not resume until", "at least until".
      const ContextToken *p1 = FromEnd(occ.left, 1);
      const ContextToken *p2 = FromEnd(occ.left, 2);
      bool qualified = occ.negation_before ||
                       (p1 != nullptr && p2 != nullptr &&
                        p2->text == "at" && p1->text == "least");
      s = qualified ? RelationSuggestion{RelType::kBefore, Confidence::kMedium}
                    : RelationSuggestion{RelType::kIBefore, Confidence::kHigh};
      break;
    }
    case RuleId::kFormer:
    case RuleId::kPreviously:
      s = RelationSuggestion{RelType::kBefore, Confidence::kHigh};
      break;
    case RuleId::kWhile:
      s = RelationSuggestion{RelType::kSimultaneous, Confidence::kHigh};
      break;
    default:
      break;
  }
  if (!s && matrix != nullptr) {
    if (auto majority = matrix->Majority(occ.expression)) {
      s = RelationSuggestion{*majority, Confidence::kMedium};
    }
  }
  if (!s && entry.default_relation) {
    s = RelationSuggestion{*entry.default_relation, Confidence::kLow};
  }
  if (s && order == ArgOrder::kSignalFirst) s->relation = Inverse(s->relation);
  return s;
}

}  // namespace signalscope
