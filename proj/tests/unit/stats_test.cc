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

#include <algorithm>
#include <string>

#include "doctest.h"
#include "signalscope/parser.h"
#include "signalscope/stats.h"
#include "support/fixtures.h"

namespace signalscope {
namespace {

using testing::ParseFragment;

constexpr const char *kDct =
    "<DCT><TIMEX3 tid=\"t0\" type=\"DATE\" value=\"1998-02-20\" "
    "functionInDocument=\"CREATION_TIME\">February 20, 1998</TIMEX3></DCT>";

Corpus One(const std::string &fragment) {
  Corpus c;
  c.label = "test";
  c.documents.push_back(ParseFragment(std::string(kDct) + fragment, "one"));
  return c;
}

std::string Instance(int n) {
  std::string i = std::to_string(n);
  return "<MAKEINSTANCE eiid=\"ei" + i + "\" eventID=\"e" + i +
         "\" tense=\"PAST\" aspect=\"NONE\" polarity=\"POS\" pos=\"VERB\"/>";
}

const AmbiguityRow &Row(const AmbiguityTable &t, const std::string &expr) {
  auto it = std::find_if(t.begin(), t.end(), [&](const AmbiguityRow &r) {
    return r.expression == expr;
  });
  REQUIRE(it != t.end());
  return *it;
}

TEST_SUITE("stats") {

TEST_CASE("fixture corpus matches the golden tables") {
  Corpus corpus = testing::LoadFixtureCorpus().corpus;
  for (const char *table : testing::kTableNames) {
    CAPTURE(table);
    CHECK(testing::ComputeTableCsv(corpus, table) == testing::GoldenCsv(table));
  }
}

TEST_CASE("fixture usage invariants") {
  Corpus corpus = testing::LoadFixtureCorpus().corpus;
  UsageSummary u = SignalUsageSummary(corpus);
  CHECK(u.n_used_by_tlink <= u.n_signals);
  CHECK(u.n_signals_multi_tlink <= u.n_used_by_tlink);
  CHECK(u.n_tlinks_with_signal >= u.n_used_by_tlink);
  SignalHistogram h = TlinksPerSignalHistogram(corpus);
  CHECK(h.DistinctSignals() == u.n_used_by_tlink);
  CHECK(h.LinkSignalPairs() == u.n_tlinks_with_signal);
  CHECK(h.MultiLinkSignals() == u.n_signals_multi_tlink);
}

TEST_CASE("empty corpus") {
  Corpus empty;
  CHECK(SignalUsageSummary(empty) == UsageSummary{});
  CHECK(TlinksPerSignalHistogram(empty).counts.empty());
  CHECK(SignalPosDistribution(empty, PosSource::kFallback).Total() == 0);
  CHECK(SignalRelationMatrix(empty).rows.empty());
  AmbiguityTable t = ExpressionAmbiguityTable(empty, CandidateLexicon::Default());
  CHECK(t.size() == 36);
  for (const AmbiguityRow &r : t) {
    CHECK(r.count_in_corpus == 0);
    CHECK(r.proportion() == 0.0);
  }
}

TEST_CASE("one link, one signal") {
  Corpus c = One(
      "<TEXT>It <EVENT eid=\"e1\" class=\"OCCURRENCE\">rained</EVENT> "
      "<SIGNAL sid=\"s1\">after</SIGNAL> noon.</TEXT>" + Instance(1) +
      "<TLINK lid=\"l1\" relType=\"AFTER\" eventInstanceID=\"ei1\" "
      "relatedToTime=\"t0\" signalID=\"s1\"/>");
  CHECK(TlinksPerSignalHistogram(c).counts ==
        std::map<std::int64_t, std::int64_t>{{1, 1}});
  UsageSummary u = SignalUsageSummary(c);
  CHECK(u.n_signals == 1);
  CHECK(u.n_used_by_tlink == 1);
  CHECK(u.n_tlinks_with_signal == 1);
  CHECK(u.n_signals_multi_tlink == 0);
}

TEST_CASE("one signal shared by two links") {
  Corpus c = One(
      "<TEXT>Stocks <EVENT eid=\"e1\" class=\"OCCURRENCE\">fell</EVENT> and "
      "bonds <EVENT eid=\"e2\" class=\"OCCURRENCE\">rose</EVENT> "
      "<SIGNAL sid=\"s1\">after</SIGNAL> the <EVENT eid=\"e3\" "
      "class=\"OCCURRENCE\">report</EVENT>.</TEXT>" +
      Instance(1) + Instance(2) + Instance(3) +
      "<TLINK lid=\"l1\" relType=\"AFTER\" eventInstanceID=\"ei1\" "
      "relatedToEventInstance=\"ei3\" signalID=\"s1\"/>"
      "<TLINK lid=\"l2\" relType=\"AFTER\" eventInstanceID=\"ei2\" "
      "relatedToEventInstance=\"ei3\" signalID=\"s1\"/>");
  CHECK(TlinksPerSignalHistogram(c).counts ==
        std::map<std::int64_t, std::int64_t>{{2, 1}});
  UsageSummary u = SignalUsageSummary(c);
  CHECK(u.n_signals_multi_tlink == 1);
  CHECK(u.n_tlinks_with_signal == 2);
  RelationCountMatrix m = SignalRelationMatrix(c);
  CHECK(m.RowTotal("after") == 2);
  CHECK(m.Count("after", RelType::kAfter) == 2);
}

TEST_CASE("signals used only by subordinating or aspectual links") {
  Corpus c = One(
      "<TEXT>They <EVENT eid=\"e1\" class=\"I_ACTION\">agreed</EVENT> to "
      "<EVENT eid=\"e2\" class=\"OCCURRENCE\">sell</EVENT> "
      "<SIGNAL sid=\"s1\">if</SIGNAL> <SIGNAL sid=\"s2\">then</SIGNAL>.</TEXT>" +
      Instance(1) + Instance(2) +
      "<SLINK lid=\"l1\" relType=\"MODAL\" eventInstanceID=\"ei1\" "
      "subordinatedEventInstance=\"ei2\" signalID=\"s1\"/>"
      "<ALINK lid=\"l2\" relType=\"INITIATES\" eventInstanceID=\"ei1\" "
      "relatedToEventInstance=\"ei2\" signalID=\"s2\"/>");
  UsageSummary u = SignalUsageSummary(c);
  CHECK(u.n_signals == 2);
  CHECK(u.n_used_by_slink == 1);
  CHECK(u.n_used_by_alink == 1);
  CHECK(u.n_used_by_tlink == 0);
  CHECK(TlinksPerSignalHistogram(c).counts.empty());
}

TEST_CASE("all-after signals are all IN") {
  Corpus c = One(
      "<TEXT><SIGNAL sid=\"s1\">after</SIGNAL> lunch and "
      "<SIGNAL sid=\"s2\">after</SIGNAL> dinner.</TEXT>");
  PosDistribution d = SignalPosDistribution(c, PosSource::kFallback);
  CHECK(d.frequency == std::map<std::string, std::int64_t>{{"IN", 2}});
  CHECK(d.Proportion("IN") == 1.0);
  CHECK(d.excluded == 0);
}

TEST_CASE("multiword signal counts its first token once") {
  Corpus c = One(
      "<TEXT><SIGNAL sid=\"s1\">At the same time</SIGNAL>, prices "
      "<EVENT eid=\"e1\" class=\"OCCURRENCE\">rose</EVENT>.</TEXT>");
  PosDistribution d = SignalPosDistribution(c, PosSource::kFallback);
  CHECK(d.frequency == std::map<std::string, std::int64_t>{{"IN", 1}});
  AmbiguityTable t = ExpressionAmbiguityTable(c, CandidateLexicon::Default());
  CHECK(Row(t, "at the same time").count_in_corpus == 1);
  CHECK(Row(t, "at the same time").count_as_signal == 1);
  CHECK(Row(t, "at").count_in_corpus == 0);
}

TEST_CASE("signals without a tag are excluded and counted") {
  Corpus c = One("<TEXT><SIGNAL sid=\"s1\">after</SIGNAL> lunch.</TEXT>");
  PosDistribution d = SignalPosDistribution(c, PosSource::kSidecar);
  CHECK(d.Total() == 0);
  CHECK(d.excluded == 1);
}

TEST_CASE("expression annotated once of twice") {
  Corpus c = One(
      "<TEXT>He <EVENT eid=\"e1\" class=\"OCCURRENCE\">left</EVENT> "
      "<SIGNAL sid=\"s1\">before</SIGNAL> noon. He had been there before.</TEXT>");
  AmbiguityTable t = ExpressionAmbiguityTable(c, CandidateLexicon::Default());
  const AmbiguityRow &r = Row(t, "before");
  CHECK(r.count_in_corpus == 2);
  CHECK(r.count_as_signal == 1);
  CHECK(r.proportion() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t.front().expression == "before");
  for (const AmbiguityRow &row : t) {
    CHECK(row.count_as_signal <= row.count_in_corpus);
    CHECK(row.proportion() >= 0.0);
    CHECK(row.proportion() <= 1.0);
  }
}

TEST_CASE("signal span must cover the match exactly") {
  Corpus c = One(
      "<TEXT>It <EVENT eid=\"e1\" class=\"OCCURRENCE\">ended</EVENT> "
      "<SIGNAL sid=\"s1\">shortly after</SIGNAL> noon.</TEXT>");
  AmbiguityTable t = ExpressionAmbiguityTable(c, CandidateLexicon::Default());
  CHECK(Row(t, "after").count_in_corpus == 1);
  CHECK(Row(t, "after").count_as_signal == 0);
}

TEST_CASE("until with an ENDED_BY link") {
  Corpus c = One(
      "<TEXT>Talks <EVENT eid=\"e1\" class=\"OCCURRENCE\">continued</EVENT> "
      "<SIGNAL sid=\"s1\">until</SIGNAL> <TIMEX3 tid=\"t1\" type=\"DATE\" "
      "value=\"1998-02-23\">Monday</TIMEX3>.</TEXT>" +
      Instance(1) +
      "<TLINK lid=\"l1\" relType=\"ENDED_BY\" eventInstanceID=\"ei1\" "
      "relatedToTime=\"t1\" signalID=\"s1\"/>");
  RelationCountMatrix m = SignalRelationMatrix(c);
  CHECK(m.rows.size() == 1);
  CHECK(m.Count("until", RelType::kEndedBy) == 1);
  CHECK(m.RowTotal("until") == 1);
}

TEST_CASE("links citing a missing signal are not counted") {
  Corpus c;
  c.documents.push_back(
      ParseTimeml(ReadFile(testing::FixturePath("broken/broken.tml"))).document);
  UsageSummary u = SignalUsageSummary(c);
  SignalHistogram h = TlinksPerSignalHistogram(c);
  CHECK(h.LinkSignalPairs() == u.n_tlinks_with_signal);
  std::int64_t total = 0;
  for (const auto &[e, row] : SignalRelationMatrix(c).rows) {
    total += SignalRelationMatrix(c).RowTotal(e);
  }
  CHECK(total == u.n_tlinks_with_signal);
}

TEST_CASE("merging per-document results equals the whole") {
  Corpus corpus = testing::LoadFixtureCorpus().corpus;
  const CandidateLexicon &lex = CandidateLexicon::Default();
  UsageSummary u;
  SignalHistogram h;
  PosDistribution p;
  RelationCountMatrix m;
  for (auto it = corpus.documents.rbegin(); it != corpus.documents.rend(); ++it) {
    u += SignalUsageSummary(*it);
    h += TlinksPerSignalHistogram(*it);
    p += SignalPosDistribution(*it, PosSource::kSidecar);
    m += SignalRelationMatrix(*it);
  }
  CHECK(u == SignalUsageSummary(corpus));
  CHECK(h == TlinksPerSignalHistogram(corpus));
  CHECK(p == SignalPosDistribution(corpus, PosSource::kSidecar));
  CHECK(m == SignalRelationMatrix(corpus));
  CHECK(ExpressionAmbiguityTable(corpus, lex, 4) ==
        ExpressionAmbiguityTable(corpus, lex, 1));
  CHECK(SignalUsageSummary(corpus, 4) == u);
}

TEST_CASE("paired ambiguity rows follow the first table") {
  Corpus corpus = testing::LoadFixtureCorpus().corpus;
  const CandidateLexicon &lex = CandidateLexicon::Default();
  AmbiguityTable before = ExpressionAmbiguityTable(corpus, lex);
  auto paired = PairAmbiguityTables(before, before);
  REQUIRE(paired.size() == before.size());
  for (std::size_t i = 0; i < paired.size(); ++i) {
    CHECK(paired[i].before == before[i]);
    CHECK(paired[i].after == before[i]);
  }
}

TEST_CASE("pos rows sort by frequency then tag") {
  PosDistribution d;
  d.frequency = {{"RB", 2}, {"IN", 5}, {"JJ", 2}};
  auto rows = d.Rows();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].first == "IN");
  CHECK(rows[1].first == "JJ");
  CHECK(rows[2].first == "RB");
  double sum = 0;
  for (const auto &[tag, n] : rows) sum += d.Proportion(tag);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

}  // TEST_SUITE

}  // namespace
}  // namespace signalscope
