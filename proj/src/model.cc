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

#include "signalscope/model.h"

#include <algorithm>
#include <cctype>

namespace signalscope {

namespace {

constexpr std::array<std::string_view, kNumRelTypes> kRelNames = {
    "BEFORE",       "AFTER",    "IBEFORE", "IAFTER",   "INCLUDES",
    "IS_INCLUDED",  "DURING",   "DURING_INV", "SIMULTANEOUS", "IDENTITY",
    "BEGINS",       "BEGUN_BY", "ENDS",    "ENDED_BY",
};

constexpr std::array<std::string_view, 7> kEventClassNames = {
    "OCCURRENCE", "STATE",     "REPORTING", "I_ACTION",
    "I_STATE",    "ASPECTUAL", "PERCEPTION",
};

constexpr std::array<std::string_view, 4> kTimexTypeNames = {
    "DATE", "TIME", "DURATION", "SET"};

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(const std::array<std::string_view, N> &names,
                           std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

template <typename Vec>
auto FindById(const Vec &items, std::string_view id, auto member)
    -> decltype(&items.front()) {
  for (const auto &item : items) {
    if (item.*member == id) return &item;
  }
  return nullptr;
}

}  // namespace

const std::array<RelType, kNumRelTypes> &AllRelTypes() {
  static const std::array<RelType, kNumRelTypes> all = [] {
    std::array<RelType, kNumRelTypes> a{};
    for (std::size_t i = 0; i < kNumRelTypes; ++i) {
      a[i] = static_cast<RelType>(i);
    }
    return a;
  }();
  return all;
}

std::string_view ToString(RelType rel) {
  return kRelNames[static_cast<std::size_t>(rel)];
}

std::optional<RelType> ParseRelType(std::string_view name) {
  return Lookup<RelType>(kRelNames, name);
}

RelType Inverse(RelType rel) {
  switch (rel) {
    case RelType::kBefore: return RelType::kAfter;
    case RelType::kAfter: return RelType::kBefore;
    case RelType::kIBefore: return RelType::kIAfter;
    case RelType::kIAfter: return RelType::kIBefore;
    case RelType::kIncludes: return RelType::kIsIncluded;
    case RelType::kIsIncluded: return RelType::kIncludes;
    case RelType::kDuring: return RelType::kDuringInv;
    case RelType::kDuringInv: return RelType::kDuring;
    case RelType::kSimultaneous: return RelType::kSimultaneous;
    case RelType::kIdentity: return RelType::kIdentity;
    case RelType::kBegins: return RelType::kBegunBy;
    case RelType::kBegunBy: return RelType::kBegins;
    case RelType::kEnds: return RelType::kEndedBy;
    case RelType::kEndedBy: return RelType::kEnds;
  }
  return rel;
}

std::string_view ToString(EventClass cls) {
  return kEventClassNames[static_cast<std::size_t>(cls)];
}

std::optional<EventClass> ParseEventClass(std::string_view name) {
  return Lookup<EventClass>(kEventClassNames, name);
}

std::string_view ToString(TimexType type) {
  return kTimexTypeNames[static_cast<std::size_t>(type)];
}

std::optional<TimexType> ParseTimexType(std::string_view name) {
  return Lookup<TimexType>(kTimexTypeNames, name);
}

std::optional<std::string> Document::DctId() const {
  std::optional<std::string> found;
  for (const Timex3 &t : timexes) {
    if (!t.IsCreationTime()) continue;
    if (found) return std::nullopt;
    found = t.tid;
  }
  return found;
}

const Event *Document::FindEvent(std::string_view eid) const {
  return FindById(events, eid, &Event::eid);
}

const EventInstance *Document::FindInstance(std::string_view eiid) const {
  return FindById(instances, eiid, &EventInstance::eiid);
}

const Timex3 *Document::FindTimex(std::string_view tid) const {
  return FindById(timexes, tid, &Timex3::tid);
}

const Signal *Document::FindSignal(std::string_view sid) const {
  return FindById(signals, sid, &Signal::sid);
}

TokenRange CoveringTokens(const std::vector<Token> &tokens, CharSpan chars) {
  auto first = std::lower_bound(
      tokens.begin(), tokens.end(), chars.begin,
      [](const Token &t, std::size_t off) { return t.char_begin < off; });
  TokenRange range;
  range.begin = static_cast<std::size_t>(first - tokens.begin());
  range.end = range.begin;
  while (range.end < tokens.size() && tokens[range.end].char_end <= chars.end) {
    ++range.end;
  }
  return range;
}

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string NormalizedSurface(const std::vector<Token> &tokens,
                              TokenRange range) {
  std::string out;
  for (std::size_t i = range.begin; i < range.end && i < tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += Lowercase(tokens[i].surface);
  }
  return out;
}

std::string NormalizeExpression(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace signalscope
