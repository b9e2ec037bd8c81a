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

#include <string>

#include "doctest.h"
#include "signalscope/corpus.h"
#include "signalscope/error.h"
#include "signalscope/parser.h"
#include "support/fixtures.h"

namespace signalscope {
namespace {

using testing::FixturePath;

constexpr const char *kMinimal = R"(<?xml version="1.0" ?>
<TimeML>
<DOCID>min</DOCID>
<DCT><TIMEX3 tid="t0" type="DATE" value="1998-02-20" functionInDocument="CREATION_TIME">February 20, 1998</TIMEX3></DCT>
<TEXT>
He <EVENT eid="e1" class="OCCURRENCE">slept</EVENT> <SIGNAL sid="s1">before</SIGNAL> noon.
</TEXT>
<MAKEINSTANCE eiid="ei1" eventID="e1" tense="PAST" aspect="NONE" polarity="POS" pos="VERB"/>
<TLINK lid="l1" relType="BEFORE" eventInstanceID="ei1" relatedToTime="t0" signalID="s1"/>
<TLINK lid="l2" relType="IS_INCLUDED" eventInstanceID="ei1" relatedToTime="t0"/>
</TimeML>
)";

TEST_SUITE("parser") {

TEST_CASE("minimal document") {
  ParseResult r = ParseTimeml(kMinimal);
  const Document &doc = r.document;
  CHECK(doc.doc_id == "min");
  CHECK(doc.events.size() == 1);
  CHECK(doc.instances.size() == 1);
  CHECK(doc.timexes.size() == 1);
  CHECK(doc.signals.size() == 1);
  CHECK(doc.tlinks.size() == 2);
  CHECK(r.diagnostics.recovered.empty());
  CHECK(doc.DctId() == std::optional<std::string>("t0"));

  const Signal &sig = doc.signals[0];
  CHECK(sig.surface == "before");
  CHECK(doc.text.substr(sig.chars.begin, sig.chars.size()) == "before");
  CHECK(doc.tokens[sig.span.begin].surface == "before");

  CHECK(doc.tlinks[0].rel == RelType::kBefore);
  CHECK(doc.tlinks[0].signal == std::optional<std::string>("s1"));
  CHECK(doc.tlinks[0].source.kind == EntityRef::Kind::kEventInstance);
  CHECK(doc.tlinks[0].target.kind == EntityRef::Kind::kTimex);
  CHECK(doc.tlinks[1].rel == RelType::kIsIncluded);
  CHECK_FALSE(doc.tlinks[1].signal.has_value());
}

TEST_CASE("explicit document id wins") {
  CHECK(ParseTimeml(kMinimal, "other").document.doc_id == "other");
}

TEST_CASE("round-trip on every fixture file") {
  for (const std::string &path :
       ExpandInputs({FixturePath("corpus"), FixturePath("lint"),
                     FixturePath("curated"), FixturePath("broken")})) {
    CAPTURE(path);
    Document first = ParseTimeml(ReadFile(path)).document;
    std::string xml = SerializeTimeml(first);
    Document second = ParseTimeml(xml).document;
    CHECK(first == second);
    CHECK(SerializeTimeml(second) == xml);
  }
}

TEST_CASE("pass-through attributes survive") {
  const char *xml = R"(<TimeML><TEXT>It <EVENT eid="e1" class="STATE" modality="would" comment="a &amp; b &lt;c&gt;">held</EVENT>.</TEXT>
<MAKEINSTANCE eiid="ei1" eventID="e1" tense="NONE" aspect="NONE" polarity="POS" pos="VERB" cardinality="3"/>
</TimeML>)";
  Document doc = ParseTimeml(xml).document;
  REQUIRE(doc.events.size() == 1);
  CHECK(doc.events[0].extra.at("modality") == "would");
  CHECK(doc.events[0].extra.at("comment") == "a & b <c>");
  CHECK(doc.instances[0].extra.at("cardinality") == "3");
  Document again = ParseTimeml(SerializeTimeml(doc)).document;
  CHECK(again.events[0].extra == doc.events[0].extra);
  CHECK(again.instances[0].extra == doc.instances[0].extra);
}

TEST_CASE("text-only document") {
  const char *xml = "<TimeML>\n  Just text, nothing else &amp; more.\n</TimeML>";
  ParseResult r = ParseTimeml(xml);
  CHECK(r.document.text == "\n  Just text, nothing else & more.\n");
  CHECK(r.document.events.empty());
  CHECK(r.document.tlinks.empty());
  CHECK(ParseTimeml(SerializeTimeml(r.document)).document.text ==
        r.document.text);
}

TEST_CASE("malformed XML reports line and column") {
  const char *xml = "<TimeML>\n<TEXT>\nrose <EVENT eid=\"e1\">fell</SIGNAL>\n</TEXT></TimeML>";
  try {
    ParseTimeml(xml);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(ParseTimeml("<TimeML><TEXT>open"), ParseError);
  CHECK_THROWS_AS(ParseTimeml(""), ParseError);
}

TEST_CASE("irregular input is recovered with diagnostics") {
  const char *xml = R"(<TimeML><TEXT>He <EVENT eid="e1" class="OCCURRENCE">left</EVENT> <FOO>now</FOO> and <EVENT eid="e2" class="WEIRD">cried</EVENT>.</TEXT>
<MAKEINSTANCE eiid="ei1" eventID="e1" tense="PAST" aspect="NONE" polarity="POS" pos="VERB"/>
<TLINK lid="l1" relType="BEFORE" eventInstanceID="e1" relatedToEventInstance="ei1"/>
</TimeML>)";
  ParseResult r = ParseTimeml(xml, "irregular");
  CHECK(r.diagnostics.doc_id == "irregular");
  CHECK(r.diagnostics.recovered.size() == 3);
  CHECK(r.document.events.size() == 1);
  REQUIRE(r.document.tlinks.size() == 1);
  // Event ids cited by links are normalized to their instance.
  CHECK(r.document.tlinks[0].source.kind == EntityRef::Kind::kEventInstance);
  CHECK(r.document.tlinks[0].source.id == "ei1");
}

TEST_CASE("fixture with an event-id link reference") {
  ParseResult r = ParseTimeml(ReadFile(FixturePath("corpus/fx08.tml")));
  CHECK(r.diagnostics.recovered.size() == 1);
  for (const TLink &l : r.document.tlinks) {
    CHECK(l.source.kind != EntityRef::Kind::kEvent);
    CHECK(l.target.kind != EntityRef::Kind::kEvent);
  }
}

TEST_CASE("annotation edges force token boundaries") {
  Document doc = testing::ParseFragment(
      "the <TIMEX3 tid=\"t1\" type=\"DATE\" value=\"1998\">1998</TIMEX3>-era "
      "<SIGNAL sid=\"s1\">after</SIGNAL>.");
  REQUIRE(doc.timexes.size() == 1);
  CHECK(doc.timexes[0].span.size() == 1);
  CHECK(doc.tokens[doc.timexes[0].span.begin].surface == "1998");
}

TEST_CASE("POS sidecar attaches tags and sentences") {
  Document doc = ParseTimeml(kMinimal).document;
  std::string sidecar = "min\tNNP\n\nFebruary\tNNP\n20\tCD\n,\t,\n1998\tCD\n\n"
                        "He\tPRP\nslept\tVBD\nbefore\tIN\nnoon\tNN\n.\t.\n";
  AttachPosSidecar(doc, sidecar);
  CHECK(doc.tokens[doc.signals[0].span.begin].pos ==
        std::optional<std::string>("IN"));
  CHECK(doc.sentence_starts == std::vector<std::size_t>{0, 1, 5});
}

TEST_CASE("misaligned sidecar names the first bad index") {
  Document doc = ParseTimeml(kMinimal).document;
  std::string wrong = "min\tNNP\nFebruary\tNNP\n20\tCD\n1998\tCD\n";
  try {
    AttachPosSidecar(doc, wrong);
    FAIL("expected AlignmentError");
  } catch (const AlignmentError &e) {
    CHECK(e.index() == 3);
  }
  std::string short_file = "min\tNNP\n";
  try {
    AttachPosSidecar(doc, short_file);
    FAIL("expected AlignmentError");
  } catch (const AlignmentError &e) {
    CHECK(e.index() == 1);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace signalscope
