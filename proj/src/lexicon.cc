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

#include "signalscope/lexicon.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "signalscope/error.h"

namespace signalscope {

namespace {

#include "lexicon_data.inc"

constexpr std::array<std::string_view, 12> kRuleNames = {
    "previously", "after",     "when",   "while",  "before",   "until",
    "already",    "meanwhile", "again",  "former", "recently", "generic",
};

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::size_t WordCount(std::string_view expression) {
  return static_cast<std::size_t>(
             std::count(expression.begin(), expression.end(), ' ')) +
         1;
}

}  // namespace

std::string_view ToString(RuleId rule) {
  return kRuleNames[static_cast<std::size_t>(rule)];
}

std::optional<RuleId> ParseRuleId(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == name) return static_cast<RuleId>(i);
  }
  return std::nullopt;
}

CandidateLexicon::CandidateLexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i].expression = NormalizeExpression(entries_[i].expression);
    const std::string &expr = entries_[i].expression;
    if (expr.empty()) throw Error("lexicon entry with empty expression");
    if (!index_.emplace(expr, i).second) {
      throw Error("duplicate lexicon expression: " + expr);
    }
    max_words_ = std::max(max_words_, WordCount(expr));
  }
}

CandidateLexicon CandidateLexicon::Parse(std::string_view text) {
  std::vector<LexiconEntry> entries;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto where = [&] { return "lexicon line " + std::to_string(line_no) + ": "; };
    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 4) throw Error(where() + "expected 4 tab-separated fields");
    LexiconEntry e;
    e.expression = std::string(f[0]);
    if (f[1] == "1" || f[1] == "true") {
      e.candidate = true;
    } else if (f[1] == "0" || f[1] == "false") {
      e.candidate = false;
    } else {
      throw Error(where() + "bad candidate flag \"" + std::string(f[1]) + "\"");
    }
    if (f[2] != "-" && !f[2].empty()) {
      e.default_relation = ParseRelType(f[2]);
      if (!e.default_relation) {
        throw Error(where() + "unknown relation \"" + std::string(f[2]) + "\"");
      }
    }
    std::optional<RuleId> rule = ParseRuleId(f[3]);
    if (!rule) throw Error(where() + "unknown rule \"" + std::string(f[3]) + "\"");
    e.rule = *rule;
    entries.push_back(std::move(e));
  }
  return CandidateLexicon(std::move(entries));
}

CandidateLexicon CandidateLexicon::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open lexicon");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

std::string_view CandidateLexicon::DefaultText() { return kDefaultLexicon; }

const CandidateLexicon &CandidateLexicon::Default() {
  static const CandidateLexicon lexicon = Parse(kDefaultLexicon);
  return lexicon;
}

const LexiconEntry *CandidateLexicon::Find(std::string_view expression) const {
  auto it = index_.find(std::string(expression));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<ExpressionMatch> CandidateLexicon::Match(
    const std::vector<Token> &tokens) const {
  std::vector<ExpressionMatch> matches;
  std::vector<std::string> lower;
  lower.reserve(tokens.size());
  for (const Token &t : tokens) lower.push_back(Lowercase(t.surface));

  std::size_t i = 0;
  std::string phrase;
  while (i < tokens.size()) {
    const LexiconEntry *hit = nullptr;
    std::size_t hit_len = 0;
    std::size_t longest = std::min(max_words_, tokens.size() - i);
    for (std::size_t len = longest; len >= 1 && hit == nullptr; --len) {
      phrase.clear();
      for (std::size_t k = 0; k < len; ++k) {
        if (k > 0) phrase += ' ';
        phrase += lower[i + k];
      }
      if (const LexiconEntry *e = Find(phrase)) {
        hit = e;
        hit_len = len;
      }
    }
    if (hit != nullptr) {
      matches.push_back({{i, i + hit_len}, hit});
      i += hit_len;
    } else {
      ++i;
    }
  }
  return matches;
}

bool HasDedicatedRule(const LexiconEntry &entry) {
  return entry.rule != RuleId::kGeneric;
}

}  // namespace signalscope
