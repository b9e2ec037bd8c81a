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

#include "signalscope/tokenizer.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace signalscope {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsPunct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

bool IsLowerS(char c) { return c == 's' || c == 'S'; }

constexpr std::string_view kRightQuote = "\xE2\x80\x99";

class TokenSink {
 public:
  TokenSink(std::string_view text, std::vector<Token> *out)
      : text_(text), out_(out) {}

  void Emit(std::size_t begin, std::size_t end) {
    if (begin >= end) return;
    Token t;
    t.index = out_->size();
    t.char_begin = begin;
    t.char_end = end;
    t.surface = std::string(text_.substr(begin, end - begin));
    out_->push_back(std::move(t));
  }

 private:
  std::string_view text_;
  std::vector<Token> *out_;
};

// Length of a possessive clitic at the end of [begin, end), or 0.
std::size_t PossessiveLength(std::string_view text, std::size_t begin,
                             std::size_t end) {
  std::size_t len = end - begin;
  if (len >= 3 && IsLowerS(text[end - 1]) && text[end - 2] == '\'') return 2;
  if (len >= 5 && IsLowerS(text[end - 1]) &&
      text.substr(end - 4, 3) == kRightQuote) {
    return 4;
  }
  return 0;
}

std::size_t NegationLength(std::string_view text, std::size_t begin,
                           std::size_t end) {
  if (end - begin < 4) return 0;
  std::string tail = Lowercase(text.substr(end - 3, 3));
  return tail == "n't" ? 3 : 0;
}

void SplitPiece(std::string_view text, std::size_t begin, std::size_t end,
                TokenSink *sink) {
  // A piece that is exactly a clitic stays whole.
  std::string_view piece = text.substr(begin, end - begin);
  if (piece == "'s" || piece == "'S") {
    sink->Emit(begin, end);
    return;
  }
  while (begin < end && IsPunct(text[begin])) {
    sink->Emit(begin, begin + 1);
    ++begin;
  }
  if (begin >= end) return;

  std::vector<std::pair<std::size_t, std::size_t>> trailing;
  std::size_t core_end = end;
  while (core_end > begin && IsPunct(text[core_end - 1])) {
    if (text[core_end - 1] == '.') {
      std::string_view rest = text.substr(begin, core_end - 1 - begin);
      if (rest.find('.') != std::string_view::npos) break;
    }
    trailing.emplace_back(core_end - 1, core_end);
    --core_end;
  }

  std::size_t clitic = PossessiveLength(text, begin, core_end);
  if (clitic == 0) clitic = NegationLength(text, begin, core_end);
  if (clitic > 0) {
    sink->Emit(begin, core_end - clitic);
    sink->Emit(core_end - clitic, core_end);
  } else {
    sink->Emit(begin, core_end);
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
    sink->Emit(it->first, it->second);
  }
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  return Tokenize(text, {});
}

std::vector<Token> Tokenize(std::string_view text,
                            std::span<const std::size_t> breaks) {
  std::vector<std::size_t> cuts(breaks.begin(), breaks.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Token> tokens;
  TokenSink sink(text, &tokens);
  std::size_t i = 0;
  auto cut = cuts.begin();
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    std::size_t chunk_end = i;
    while (chunk_end < text.size() && !IsSpace(text[chunk_end])) ++chunk_end;
    std::size_t piece_begin = i;
    cut = std::upper_bound(cuts.begin(), cuts.end(), piece_begin);
    for (; cut != cuts.end() && *cut < chunk_end; ++cut) {
      SplitPiece(text, piece_begin, *cut, &sink);
      piece_begin = *cut;
    }
    SplitPiece(text, piece_begin, chunk_end, &sink);
    i = chunk_end;
  }
  return tokens;
}

std::vector<std::size_t> HeuristicSentenceStarts(
    const std::vector<Token> &tokens, std::span<const std::size_t> boundaries) {
  std::vector<std::size_t> starts;
  if (tokens.empty()) return starts;
  std::vector<std::size_t> edges(boundaries.begin(), boundaries.end());
  std::sort(edges.begin(), edges.end());
  starts.push_back(0);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::string &prev = tokens[i - 1].surface;
    bool starts_here = prev == "." || prev == "!" || prev == "?";
    if (!starts_here) {
      // Any edge between the two tokens separates sentences.
      auto it = std::lower_bound(edges.begin(), edges.end(),
                                 tokens[i - 1].char_end);
      starts_here = it != edges.end() && *it <= tokens[i].char_begin;
    }
    if (starts_here) starts.push_back(i);
  }
  return starts;
}

std::vector<std::size_t> SentenceStarts(const Document &doc) {
  if (!doc.sentence_starts.empty()) return doc.sentence_starts;
  std::vector<std::size_t> edges;
  edges.reserve(doc.markup.size() * 2);
  for (const Markup &m : doc.markup) {
    edges.push_back(m.chars.begin);
    edges.push_back(m.chars.end);
  }
  return HeuristicSentenceStarts(doc.tokens, edges);
}

std::vector<std::size_t> SentenceIds(const Document &doc) {
  std::vector<std::size_t> starts = SentenceStarts(doc);
  std::vector<bool> is_start(doc.tokens.size(), false);
  for (std::size_t s : starts) {
    if (s < is_start.size()) is_start[s] = true;
  }
  std::vector<std::size_t> ids(doc.tokens.size(), 0);
  std::size_t sentence = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0 && is_start[i]) ++sentence;
    ids[i] = sentence;
  }
  return ids;
}

}  // namespace signalscope
