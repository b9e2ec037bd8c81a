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

// Deterministic, offset-preserving tokenizer.
//
// Rules, applied in order to each whitespace-delimited chunk:
//   1. The chunk is cut at every forced break offset that falls inside it.
//   2. Leading ASCII punctuation characters become one token each.
//   3. Trailing ASCII punctuation characters become one token each, except a
//      final '.' on a chunk that already contains a '.' (abbreviations such as
//      "U.S." or "a.m.").
//   4. A possessive clitic "'s" (also with U+2019) and a negation clitic
//      "n't" are split from the end of what remains.
//   5. Internal punctuation, including '-' and '/', stays attached, so ranges
//      such as "1994-95" and "3/4" are single tokens.
// A bare "s" following an apostrophe only arises when a forced break
// separates the two, and is then its own token.

#ifndef SIGNALSCOPE_TOKENIZER_H_
#define SIGNALSCOPE_TOKENIZER_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "signalscope/model.h"

namespace signalscope {

std::vector<Token> Tokenize(std::string_view text);

// As above, with extra token boundaries at the given byte offsets (any order).
// The parser passes annotation boundaries here so that every annotated span
// aligns with whole tokens.
std::vector<Token> Tokenize(std::string_view text,
                            std::span<const std::size_t> breaks);

// Token indices that begin a sentence: index 0, every token following ".",
// "!" or "?", and every token following a forced break in `boundaries`
// (typically markup element edges).
std::vector<std::size_t> HeuristicSentenceStarts(
    const std::vector<Token> &tokens, std::span<const std::size_t> boundaries);

// Sentence starts of a document: the sidecar-provided ones when present,
// otherwise the heuristic ones using markup edges as boundaries.
std::vector<std::size_t> SentenceStarts(const Document &doc);

// Per-token sentence ordinal computed from SentenceStarts().
std::vector<std::size_t> SentenceIds(const Document &doc);

}  // namespace signalscope

#endif  // SIGNALSCOPE_TOKENIZER_H_
