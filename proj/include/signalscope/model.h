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

// In-memory model of the TimeML 1.2 subset handled by the toolkit: events,
// event instances, time expressions, signals and the three link types.
//
// Offsets are byte offsets into Document::text, which holds the character
// data of the source document with all tags removed. Token ranges are
// half-open index ranges into Document::tokens.

#ifndef SIGNALSCOPE_MODEL_H_
#define SIGNALSCOPE_MODEL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace signalscope {

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const CharSpan &) const = default;
};

struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const { return begin >= end; }
  std::size_t size() const { return empty() ? 0 : end - begin; }
  bool Contains(std::size_t index) const { return index >= begin && index < end; }
  bool Overlaps(const TokenRange &other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const TokenRange &) const = default;
};

// Unmodeled XML attributes, retained for lossless serialization.
using Attributes = std::map<std::string, std::string>;

struct Token {
  std::size_t index = 0;
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
  std::string surface;
  std::optional<std::string> pos;  // Penn Treebank tag

  bool operator==(const Token &) const = default;
};

enum class EventClass : std::uint8_t {
  kOccurrence,
  kState,
  kReporting,
  kIAction,
  kIState,
  kAspectual,
  kPerception,
};

enum class TimexType : std::uint8_t { kDate, kTime, kDuration, kSet };

// TimeML TLINK relation types. The declaration order is the tie-break order
// used wherever a majority relation is chosen.
enum class RelType : std::uint8_t {
  kBefore,
  kAfter,
  kIBefore,
  kIAfter,
  kIncludes,
  kIsIncluded,
  kDuring,
  kDuringInv,
  kSimultaneous,
  kIdentity,
  kBegins,
  kBegunBy,
  kEnds,
  kEndedBy,
};

inline constexpr std::size_t kNumRelTypes = 14;

const std::array<RelType, kNumRelTypes> &AllRelTypes();
std::string_view ToString(RelType rel);
std::optional<RelType> ParseRelType(std::string_view name);

// Relation obtained by swapping the link arguments. SIMULTANEOUS and IDENTITY
// map to themselves; DURING and DURING_INV form a pair.
RelType Inverse(RelType rel);

std::string_view ToString(EventClass cls);
std::optional<EventClass> ParseEventClass(std::string_view name);
std::string_view ToString(TimexType type);
std::optional<TimexType> ParseTimexType(std::string_view name);

struct Event {
  std::string eid;
  CharSpan chars;
  TokenRange span;
  EventClass event_class = EventClass::kOccurrence;
  Attributes extra;

  bool operator==(const Event &) const = default;
};

// MAKEINSTANCE. Links in TimeBank 1.2 cite instances rather than events.
struct EventInstance {
  std::string eiid;
  std::string event_id;
  std::string tense;
  std::string aspect;
  std::string polarity;
  std::string pos;
  Attributes extra;

  bool operator==(const EventInstance &) const = default;
};

struct Timex3 {
  std::string tid;
  CharSpan chars;
  TokenRange span;
  TimexType type = TimexType::kDate;
  std::string value;
  std::optional<std::string> function_in_document;
  Attributes extra;

  bool IsCreationTime() const {
    return function_in_document && *function_in_document == "CREATION_TIME";
  }
  bool operator==(const Timex3 &) const = default;
};

struct Signal {
  std::string sid;
  CharSpan chars;
  TokenRange span;
  std::string surface;  // lowercased token surfaces joined by single spaces
  Attributes extra;

  bool operator==(const Signal &) const = default;
};

// Link argument. kEvent only survives parsing when a link cites an eid whose
// event has no instance.
struct EntityRef {
  enum class Kind : std::uint8_t { kEventInstance, kEvent, kTimex };

  Kind kind = Kind::kEventInstance;
  std::string id;

  bool operator==(const EntityRef &) const = default;
};

struct TLink {
  std::string lid;
  RelType rel = RelType::kBefore;
  EntityRef source;
  EntityRef target;
  std::optional<std::string> signal;
  Attributes extra;

  bool operator==(const TLink &) const = default;
};

// SLINK and ALINK share a shape; their relation names pass through unchanged.
struct UntypedLink {
  std::string lid;
  std::string rel;
  EntityRef source;
  EntityRef target;
  std::optional<std::string> signal;
  Attributes extra;

  bool operator==(const UntypedLink &) const = default;
};

using SLink = UntypedLink;
using ALink = UntypedLink;

// Any non-annotation element (TimeML root, DOCID, DCT, TEXT, ...). Kept so the
// document serializes back to the same structure.
struct Markup {
  std::string name;
  Attributes attributes;
  CharSpan chars;
  int depth = 0;

  bool operator==(const Markup &) const = default;
};

struct Document {
  std::string doc_id;
  std::string text;
  std::vector<Token> tokens;
  // Token indices that begin a sentence. Filled from a POS sidecar; empty
  // means sentence boundaries are found heuristically.
  std::vector<std::size_t> sentence_starts;
  std::vector<Event> events;
  std::vector<EventInstance> instances;
  std::vector<Timex3> timexes;
  std::vector<Signal> signals;
  std::vector<TLink> tlinks;
  std::vector<SLink> slinks;
  std::vector<ALink> alinks;
  std::vector<Markup> markup;

  // tid of the creation-time timex, if exactly one is designated.
  std::optional<std::string> DctId() const;

  const Event *FindEvent(std::string_view eid) const;
  const EventInstance *FindInstance(std::string_view eiid) const;
  const Timex3 *FindTimex(std::string_view tid) const;
  const Signal *FindSignal(std::string_view sid) const;

  bool operator==(const Document &) const = default;
};

// Tokens fully inside `chars`. Empty when the span covers no token.
TokenRange CoveringTokens(const std::vector<Token> &tokens, CharSpan chars);

// Lowercase token surfaces of `range` joined by single spaces.
std::string NormalizedSurface(const std::vector<Token> &tokens,
                              TokenRange range);

// ASCII lowercase; multibyte sequences pass through.
std::string Lowercase(std::string_view text);

// Lowercases and collapses runs of whitespace to one space; trims the ends.
std::string NormalizeExpression(std::string_view text);

// A concrete link argument, with instances dereferenced to their event.
using Entity = std::variant<std::reference_wrapper<const Event>,
                            std::reference_wrapper<const Timex3>>;

}  // namespace signalscope

#endif  // SIGNALSCOPE_MODEL_H_
