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

#include "signalscope/parser.h"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "signalscope/error.h"
#include "signalscope/tokenizer.h"

namespace signalscope {

namespace {

// Elements that carry document structure rather than annotation.
const std::unordered_set<std::string> &KnownContainers() {
  static const std::unordered_set<std::string> names = {
      "TimeML", "DOCID",    "DCT",      "TITLE",    "TEXT",     "EXTRAINFO",
      "DOC",    "DOCNO",    "DOCTYPE",  "TXTTYPE",  "BODY",     "HEADLINE",
      "HL",     "HEAD",     "DATELINE", "DATE",     "DD",       "SO",
      "IN",     "CO",       "G",        "AN",       "BYLINE",   "PUBDATE",
      "NWORDS", "FILEID",   "HEADER",   "TRAILER",  "STORYID",  "SLUG",
      "P",      "p",        "s",        "S",        "TURN",     "SPEAKER",
      "DOCUMENT", "CSTYPE", "KEYWORD",  "PREAMBLE", "END_TIME", "NOTE",
      "FOOTER", "ANNOTATION", "TLINKS", "ID",       "BLURB",    "SUBJECT",
  };
  return names;
}

struct RawElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::size_t begin = 0;  // offset into collected text
  std::size_t end = 0;
  int depth = 0;
  std::size_t line = 0;
  std::size_t column = 0;

  const std::string *Attr(std::string_view key) const {
    for (const auto &[k, v] : attributes) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

class XmlScanner {
 public:
  explicit XmlScanner(std::string_view input) : in_(input) {}

  // Fills text_ and elements_ from the document element.
  void Run() {
    if (in_.substr(0, 3) == "\xEF\xBB\xBF") Advance(3);
    SkipMisc();
    if (AtEnd() || Peek() != '<') Fail("expected root element");
    ParseElement(0);
    SkipMisc();
    if (!AtEnd()) Fail("content after root element");
  }

  std::string &text() { return text_; }
  std::vector<RawElement> &elements() { return elements_; }

 private:
  bool AtEnd() const { return pos_ >= in_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }
  bool LookingAt(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < in_.size(); ++i, ++pos_) {
      if (in_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw ParseError(message, line_, column_);
  }

  void SkipUntil(std::string_view terminator, const char *what) {
    std::size_t found = in_.find(terminator, pos_);
    if (found == std::string_view::npos) {
      Fail(std::string("unterminated ") + what);
    }
    Advance(found + terminator.size() - pos_);
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) {
      Advance();
    }
  }

  void SkipDoctype() {
    Advance(9);
    int bracket = 0;
    while (!AtEnd()) {
      char c = Peek();
      if (c == '[') ++bracket;
      if (c == ']') --bracket;
      if (c == '>' && bracket == 0) {
        Advance();
        return;
      }
      Advance();
    }
    Fail("unterminated DOCTYPE");
  }

  // Prolog and epilog: whitespace, comments, processing instructions.
  void SkipMisc() {
    for (;;) {
      SkipSpace();
      if (LookingAt("<?")) {
        SkipUntil("?>", "processing instruction");
      } else if (LookingAt("<!--")) {
        SkipUntil("-->", "comment");
      } else if (LookingAt("<!DOCTYPE")) {
        SkipDoctype();
      } else {
        return;
      }
    }
  }

  static bool IsNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.' || c == ':' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  std::string ParseName() {
    std::size_t start = pos_;
    while (!AtEnd() && IsNameChar(Peek())) Advance();
    if (start == pos_) Fail("expected a name");
    return std::string(in_.substr(start, pos_ - start));
  }

  static void AppendUtf8(std::uint32_t cp, std::string *out) {
    if (cp < 0x80) {
      *out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      *out += static_cast<char>(0xC0 | (cp >> 6));
      *out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      *out += static_cast<char>(0xE0 | (cp >> 12));
      *out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      *out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      *out += static_cast<char>(0xF0 | (cp >> 18));
      *out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      *out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      *out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  // At '&'. Appends the decoded entity.
  void ParseReference(std::string *out) {
    std::size_t semi = in_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) {
      Fail("unterminated entity reference");
    }
    std::string_view name = in_.substr(pos_ + 1, semi - pos_ - 1);
    if (name == "lt") {
      *out += '<';
    } else if (name == "gt") {
      *out += '>';
    } else if (name == "amp") {
      *out += '&';
    } else if (name == "quot") {
      *out += '"';
    } else if (name == "apos") {
      *out += '\'';
    } else if (name.size() > 1 && name[0] == '#') {
      std::uint32_t cp = 0;
      bool hex = name[1] == 'x' || name[1] == 'X';
      std::string_view digits = name.substr(hex ? 2 : 1);
      if (digits.empty()) Fail("empty character reference");
      for (char c : digits) {
        int v;
        if (c >= '0' && c <= '9') {
          v = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          v = c - 'a' + 10;
        } else if (hex && c >= 'A' && c <= 'F') {
          v = c - 'A' + 10;
        } else {
          Fail("bad character reference");
        }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) Fail("character reference out of range");
      }
      AppendUtf8(cp, out);
    } else {
      Fail("unknown entity &" + std::string(name) + ";");
    }
    Advance(semi + 1 - pos_);
  }

  void ParseAttributes(RawElement *el) {
    for (;;) {
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag");
      if (Peek() == '>' || LookingAt("/>")) return;
      std::string key = ParseName();
      SkipSpace();
      if (Peek() != '=') Fail("expected '=' after attribute " + key);
      Advance();
      SkipSpace();
      char quote = Peek();
      if (quote != '"' && quote != '\'') Fail("expected quoted value");
      Advance();
      std::string value;
      while (!AtEnd() && Peek() != quote) {
        if (Peek() == '&') {
          ParseReference(&value);
        } else if (Peek() == '<') {
          Fail("'<' in attribute value");
        } else {
          value += Peek();
          Advance();
        }
      }
      if (AtEnd()) Fail("unterminated attribute value");
      Advance();
      if (el->Attr(key) != nullptr) Fail("duplicate attribute " + key);
      el->attributes.emplace_back(std::move(key), std::move(value));
    }
  }

  void ParseElement(int depth) {
    RawElement el;
    el.line = line_;
    el.column = column_;
    Advance();  // '<'
    el.name = ParseName();
    el.depth = depth;
    ParseAttributes(&el);
    el.begin = text_.size();
    std::size_t slot = elements_.size();
    elements_.push_back(el);
    if (LookingAt("/>")) {
      Advance(2);
      elements_[slot].end = text_.size();
      return;
    }
    Advance();  // '>'
    for (;;) {
      if (AtEnd()) Fail("unclosed element <" + el.name + ">");
      char c = Peek();
      if (c == '<') {
        if (LookingAt("</")) {
          Advance(2);
          std::string name = ParseName();
          if (name != el.name) {
            Fail("mismatched end tag </" + name + "> for <" + el.name + ">");
          }
          SkipSpace();
          if (Peek() != '>') Fail("expected '>'");
          Advance();
          elements_[slot].end = text_.size();
          return;
        }
        if (LookingAt("<!--")) {
          SkipUntil("-->", "comment");
        } else if (LookingAt("<![CDATA[")) {
          Advance(9);
          std::size_t end = in_.find("]]>", pos_);
          if (end == std::string_view::npos) Fail("unterminated CDATA");
          text_.append(in_.substr(pos_, end - pos_));
          Advance(end + 3 - pos_);
        } else if (LookingAt("<?")) {
          SkipUntil("?>", "processing instruction");
        } else {
          ParseElement(depth + 1);
        }
      } else if (c == '&') {
        ParseReference(&text_);
      } else {
        text_ += c;
        Advance();
      }
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::string text_;
  std::vector<RawElement> elements_;
};

std::string Location(const RawElement &el) {
  return std::to_string(el.line) + ":" + std::to_string(el.column);
}

Attributes ExtraAttributes(const RawElement &el,
                           std::initializer_list<std::string_view> modeled) {
  Attributes extra;
  for (const auto &[k, v] : el.attributes) {
    if (std::find(modeled.begin(), modeled.end(), k) == modeled.end()) {
      extra[k] = v;
    }
  }
  return extra;
}

std::string AttrOr(const RawElement &el, std::string_view key) {
  const std::string *v = el.Attr(key);
  return v ? *v : std::string();
}

std::optional<std::string> OptionalAttr(const RawElement &el,
                                        std::string_view key) {
  const std::string *v = el.Attr(key);
  if (v == nullptr) return std::nullopt;
  return *v;
}

class DocumentBuilder {
 public:
  DocumentBuilder(std::string text, std::vector<RawElement> elements,
                  std::string_view doc_id)
      : elements_(std::move(elements)) {
    doc_.text = std::move(text);
    doc_.doc_id = std::string(doc_id);
    diag_.doc_id = doc_.doc_id;
  }

  ParseResult Build() {
    std::vector<std::size_t> breaks;
    for (const RawElement &el : elements_) {
      if (IsLinkLike(el.name)) continue;
      breaks.push_back(el.begin);
      breaks.push_back(el.end);
    }
    doc_.tokens = Tokenize(doc_.text, breaks);

    for (const RawElement &el : elements_) {
      if (el.name == "EVENT") {
        AddEvent(el);
      } else if (el.name == "TIMEX3") {
        AddTimex(el);
      } else if (el.name == "SIGNAL") {
        AddSignal(el);
      } else if (el.name == "MAKEINSTANCE") {
        AddInstance(el);
      } else if (el.name == "TLINK") {
        AddTLink(el);
      } else if (el.name == "SLINK" || el.name == "ALINK") {
        AddUntypedLink(el);
      } else {
        AddMarkup(el);
      }
    }
    NormalizeEventRefs();
    if (doc_.doc_id.empty()) {
      for (const Markup &m : doc_.markup) {
        if (m.name == "DOCID") {
          doc_.doc_id = NormalizeSpace(
              doc_.text.substr(m.chars.begin, m.chars.size()));
          break;
        }
      }
      diag_.doc_id = doc_.doc_id;
    }
    return ParseResult{std::move(doc_), std::move(diag_)};
  }

 private:
  static bool IsLinkLike(const std::string &name) {
    return name == "MAKEINSTANCE" || name == "TLINK" || name == "SLINK" ||
           name == "ALINK";
  }

  static std::string NormalizeSpace(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
  }

  void Recover(const RawElement &el, std::string message) {
    diag_.recovered.push_back({Location(el), std::move(message)});
  }

  CharSpan Span(const RawElement &el) const { return {el.begin, el.end}; }

  void AddMarkup(const RawElement &el) {
    if (!KnownContainers().contains(el.name)) {
      Recover(el, "unknown element <" + el.name + "> kept as markup");
    }
    Markup m;
    m.name = el.name;
    for (const auto &[k, v] : el.attributes) m.attributes[k] = v;
    m.chars = Span(el);
    m.depth = el.depth;
    doc_.markup.push_back(std::move(m));
  }

  void AddEvent(const RawElement &el) {
    std::string cls = AttrOr(el, "class");
    std::optional<EventClass> parsed = ParseEventClass(cls);
    if (!parsed) {
      Recover(el, "EVENT with unknown class \"" + cls + "\" skipped");
      return;
    }
    Event e;
    e.eid = AttrOr(el, "eid");
    e.chars = Span(el);
    e.span = CoveringTokens(doc_.tokens, e.chars);
    e.event_class = *parsed;
    e.extra = ExtraAttributes(el, {"eid", "class"});
    doc_.events.push_back(std::move(e));
  }

  void AddTimex(const RawElement &el) {
    std::string type = AttrOr(el, "type");
    std::optional<TimexType> parsed = ParseTimexType(type);
    if (!parsed) {
      Recover(el, "TIMEX3 with unknown type \"" + type + "\" skipped");
      return;
    }
    Timex3 t;
    t.tid = AttrOr(el, "tid");
    t.chars = Span(el);
    t.span = CoveringTokens(doc_.tokens, t.chars);
    t.type = *parsed;
    t.value = AttrOr(el, "value");
    t.function_in_document = OptionalAttr(el, "functionInDocument");
    t.extra = ExtraAttributes(el, {"tid", "type", "value", "functionInDocument"});
    doc_.timexes.push_back(std::move(t));
  }

  void AddSignal(const RawElement &el) {
    Signal s;
    s.sid = AttrOr(el, "sid");
    s.chars = Span(el);
    s.span = CoveringTokens(doc_.tokens, s.chars);
    s.surface = NormalizedSurface(doc_.tokens, s.span);
    s.extra = ExtraAttributes(el, {"sid"});
    doc_.signals.push_back(std::move(s));
  }

  void AddInstance(const RawElement &el) {
    EventInstance in;
    in.eiid = AttrOr(el, "eiid");
    in.event_id = AttrOr(el, "eventID");
    in.tense = AttrOr(el, "tense");
    in.aspect = AttrOr(el, "aspect");
    in.polarity = AttrOr(el, "polarity");
    in.pos = AttrOr(el, "pos");
    in.extra = ExtraAttributes(
        el, {"eiid", "eventID", "tense", "aspect", "polarity", "pos"});
    doc_.instances.push_back(std::move(in));
  }

  // Reads one link argument from whichever of the given attributes is set.
  std::optional<EntityRef> ReadRef(const RawElement &el,
                                   std::string_view event_attr,
                                   std::string_view time_attr) {
    if (const std::string *v = el.Attr(event_attr)) {
      return EntityRef{EntityRef::Kind::kEventInstance, *v};
    }
    if (!time_attr.empty()) {
      if (const std::string *v = el.Attr(time_attr)) {
        return EntityRef{EntityRef::Kind::kTimex, *v};
      }
    }
    return std::nullopt;
  }

  void AddTLink(const RawElement &el) {
    std::string rel = AttrOr(el, "relType");
    std::optional<RelType> parsed = ParseRelType(rel);
    if (!parsed) {
      Recover(el, "TLINK with unknown relType \"" + rel + "\" skipped");
      return;
    }
    auto source = ReadRef(el, "eventInstanceID", "timeID");
    auto target = ReadRef(el, "relatedToEventInstance", "relatedToTime");
    if (!source || !target) {
      Recover(el, "TLINK without source or target skipped");
      return;
    }
    TLink link;
    link.lid = AttrOr(el, "lid");
    link.rel = *parsed;
    link.source = *source;
    link.target = *target;
    link.signal = OptionalAttr(el, "signalID");
    link.extra = ExtraAttributes(
        el, {"lid", "relType", "eventInstanceID", "timeID",
             "relatedToEventInstance", "relatedToTime", "signalID"});
    doc_.tlinks.push_back(std::move(link));
  }

  void AddUntypedLink(const RawElement &el) {
    bool is_slink = el.name == "SLINK";
    std::string_view target_attr =
        is_slink ? "subordinatedEventInstance" : "relatedToEventInstance";
    auto source = ReadRef(el, "eventInstanceID", "");
    auto target = ReadRef(el, target_attr, "");
    if (!source || !target) {
      Recover(el, el.name + " without source or target skipped");
      return;
    }
    UntypedLink link;
    link.lid = AttrOr(el, "lid");
    link.rel = AttrOr(el, "relType");
    link.source = *source;
    link.target = *target;
    link.signal = OptionalAttr(el, "signalID");
    link.extra = ExtraAttributes(
        el, {"lid", "relType", "eventInstanceID", target_attr, "signalID"});
    (is_slink ? doc_.slinks : doc_.alinks).push_back(std::move(link));
  }

  // Links may cite an eid where an eiid is expected. Such references are
  // rewritten to the event's first instance, or kept as event references
  // when the event has none.
  void NormalizeEventRefs() {
    std::unordered_set<std::string> eiids;
    for (const EventInstance &in : doc_.instances) eiids.insert(in.eiid);
    std::unordered_map<std::string, std::string> first_instance;
    for (const EventInstance &in : doc_.instances) {
      first_instance.emplace(in.event_id, in.eiid);
    }
    std::unordered_set<std::string> eids;
    for (const Event &e : doc_.events) eids.insert(e.eid);

    auto fix = [&](EntityRef &ref, const std::string &lid) {
      if (ref.kind != EntityRef::Kind::kEventInstance) return;
      if (eiids.contains(ref.id) || !eids.contains(ref.id)) return;
      auto it = first_instance.find(ref.id);
      if (it != first_instance.end()) {
        diag_.recovered.push_back(
            {lid, "event id " + ref.id + " normalized to instance " +
                      it->second});
        ref.id = it->second;
      } else {
        diag_.recovered.push_back(
            {lid, "event id " + ref.id + " has no instance; kept as event"});
        ref.kind = EntityRef::Kind::kEvent;
      }
    };
    for (TLink &l : doc_.tlinks) {
      fix(l.source, l.lid);
      fix(l.target, l.lid);
    }
    for (auto *links : {&doc_.slinks, &doc_.alinks}) {
      for (UntypedLink &l : *links) {
        fix(l.source, l.lid);
        fix(l.target, l.lid);
      }
    }
  }

  std::vector<RawElement> elements_;
  Document doc_;
  ParseDiagnostics diag_;
};

// ---------------------------------------------------------------------------
// Serialization.

void EscapeText(std::string_view s, std::string *out) {
  for (char c : s) {
    switch (c) {
      case '&': *out += "&amp;"; break;
      case '<': *out += "&lt;"; break;
      case '>': *out += "&gt;"; break;
      default: *out += c;
    }
  }
}

void EscapeAttr(std::string_view s, std::string *out) {
  for (char c : s) {
    switch (c) {
      case '&': *out += "&amp;"; break;
      case '<': *out += "&lt;"; break;
      case '>': *out += "&gt;"; break;
      case '"': *out += "&quot;"; break;
      default: *out += c;
    }
  }
}

class TagWriter {
 public:
  explicit TagWriter(std::string name) : name_(std::move(name)) {}

  TagWriter &Attr(std::string_view key, std::string_view value) {
    attrs_ += ' ';
    attrs_ += key;
    attrs_ += "=\"";
    EscapeAttr(value, &attrs_);
    attrs_ += '"';
    return *this;
  }

  TagWriter &Extra(const Attributes &extra) {
    for (const auto &[k, v] : extra) Attr(k, v);
    return *this;
  }

  std::string Open() const { return "<" + name_ + attrs_ + ">"; }
  std::string Empty() const { return "<" + name_ + attrs_ + "/>"; }
  std::string Close() const { return "</" + name_ + ">"; }

 private:
  std::string name_;
  std::string attrs_;
};

struct InlineItem {
  CharSpan chars;
  int rank = 0;  // order among items with identical spans
  TagWriter tag;
  bool root = false;
};

std::string RefAttrName(const EntityRef &ref, bool is_source,
                        std::string_view event_target_attr) {
  if (ref.kind == EntityRef::Kind::kTimex) {
    return is_source ? "timeID" : "relatedToTime";
  }
  return is_source ? "eventInstanceID" : std::string(event_target_attr);
}

std::string LinkElements(const Document &doc) {
  std::string out;
  for (const EventInstance &in : doc.instances) {
    out += TagWriter("MAKEINSTANCE")
               .Attr("eiid", in.eiid)
               .Attr("eventID", in.event_id)
               .Attr("tense", in.tense)
               .Attr("aspect", in.aspect)
               .Attr("polarity", in.polarity)
               .Attr("pos", in.pos)
               .Extra(in.extra)
               .Empty();
  }
  for (const TLink &l : doc.tlinks) {
    TagWriter w("TLINK");
    w.Attr("lid", l.lid).Attr("relType", ToString(l.rel));
    w.Attr(RefAttrName(l.source, true, ""), l.source.id);
    w.Attr(RefAttrName(l.target, false, "relatedToEventInstance"), l.target.id);
    if (l.signal) w.Attr("signalID", *l.signal);
    out += w.Extra(l.extra).Empty();
  }
  auto untyped = [&](const std::vector<UntypedLink> &links,
                     const char *name, const char *target_attr) {
    for (const UntypedLink &l : links) {
      TagWriter w(name);
      w.Attr("lid", l.lid).Attr("relType", l.rel);
      w.Attr("eventInstanceID", l.source.id);
      w.Attr(target_attr, l.target.id);
      if (l.signal) w.Attr("signalID", *l.signal);
      out += w.Extra(l.extra).Empty();
    }
  };
  untyped(doc.slinks, "SLINK", "subordinatedEventInstance");
  untyped(doc.alinks, "ALINK", "relatedToEventInstance");
  return out;
}

}  // namespace

ParseResult ParseTimeml(std::string_view xml, std::string_view doc_id) {
  XmlScanner scanner(xml);
  scanner.Run();
  DocumentBuilder builder(std::move(scanner.text()),
                          std::move(scanner.elements()), doc_id);
  return builder.Build();
}

std::string SerializeTimeml(const Document &doc) {
  std::vector<InlineItem> items;
  bool has_root = false;
  for (const Markup &m : doc.markup) {
    TagWriter w(m.name);
    for (const auto &[k, v] : m.attributes) w.Attr(k, v);
    bool root = m.depth == 0 && m.chars.begin == 0 &&
                m.chars.end == doc.text.size() && !has_root;
    has_root = has_root || root;
    items.push_back({m.chars, m.depth, std::move(w), root});
  }
  constexpr int kAnnotationRank = 1 << 20;
  for (const Timex3 &t : doc.timexes) {
    TagWriter w("TIMEX3");
    w.Attr("tid", t.tid).Attr("type", ToString(t.type)).Attr("value", t.value);
    if (t.function_in_document) {
      w.Attr("functionInDocument", *t.function_in_document);
    }
    items.push_back({t.chars, kAnnotationRank, std::move(w.Extra(t.extra))});
  }
  for (const Event &e : doc.events) {
    TagWriter w("EVENT");
    w.Attr("eid", e.eid).Attr("class", ToString(e.event_class)).Extra(e.extra);
    items.push_back({e.chars, kAnnotationRank + 1, std::move(w)});
  }
  for (const Signal &s : doc.signals) {
    TagWriter w("SIGNAL");
    w.Attr("sid", s.sid).Extra(s.extra);
    items.push_back({s.chars, kAnnotationRank + 2, std::move(w)});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const InlineItem &a, const InlineItem &b) {
                     if (a.chars.begin != b.chars.begin) {
                       return a.chars.begin < b.chars.begin;
                     }
                     if (a.chars.end != b.chars.end) {
                       return a.chars.end > b.chars.end;
                     }
                     return a.rank < b.rank;
                   });

  std::string links = LinkElements(doc);
  std::string out = "<?xml version=\"1.0\" ?>\n";
  if (!has_root) out += "<TimeML>";
  std::size_t pos = 0;
  std::vector<const InlineItem *> stack;
  auto emit_text = [&](std::size_t upto) {
    if (upto > pos) {
      EscapeText(std::string_view(doc.text).substr(pos, upto - pos), &out);
      pos = upto;
    }
  };
  auto close_top = [&] {
    const InlineItem *top = stack.back();
    emit_text(top->chars.end);
    if (top->root) out += links;
    out += top->tag.Close();
    stack.pop_back();
  };
  for (const InlineItem &item : items) {
    while (!stack.empty() && stack.back()->chars.end <= item.chars.begin) {
      close_top();
    }
    emit_text(item.chars.begin);
    if (item.chars.size() == 0 && !item.root) {
      out += item.tag.Empty();
      continue;
    }
    out += item.tag.Open();
    stack.push_back(&item);
  }
  while (!stack.empty()) close_top();
  emit_text(doc.text.size());
  if (!has_root) out += links + "</TimeML>";
  out += '\n';
  return out;
}

void AttachPosSidecar(Document &doc, std::string_view sidecar) {
  std::vector<std::size_t> starts;
  bool sentence_open = false;
  std::size_t index = 0;
  std::size_t line_start = 0;
  std::vector<std::string> tags;
  while (line_start <= sidecar.size()) {
    std::size_t line_end = sidecar.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = sidecar.size();
    std::string_view line = sidecar.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line_start = line_end + 1;

    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      sentence_open = false;
      if (line_end == sidecar.size()) break;
      continue;
    }
    std::size_t tab = line.find('\t');
    std::string_view word = line.substr(0, tab);
    std::string_view tag =
        tab == std::string_view::npos ? std::string_view() : line.substr(tab + 1);
    if (index >= doc.tokens.size()) {
      throw AlignmentError("sidecar has more tokens than the document (" +
                               std::to_string(doc.tokens.size()) + ")",
                           index);
    }
    if (word != doc.tokens[index].surface) {
      throw AlignmentError("sidecar token \"" + std::string(word) +
                               "\" does not match document token \"" +
                               doc.tokens[index].surface + "\" at index " +
                               std::to_string(index),
                           index);
    }
    if (!sentence_open) {
      starts.push_back(index);
      sentence_open = true;
    }
    tags.emplace_back(tag);
    ++index;
    if (line_end == sidecar.size()) break;
  }
  if (index != doc.tokens.size()) {
    throw AlignmentError("sidecar ends at token " + std::to_string(index) +
                             " of " + std::to_string(doc.tokens.size()),
                         index);
  }
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i].empty()) {
      doc.tokens[i].pos.reset();
    } else {
      doc.tokens[i].pos = tags[i];
    }
  }
  doc.sentence_starts = std::move(starts);
}

}  // namespace signalscope
