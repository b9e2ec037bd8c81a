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

// Seeded generator of random, well-formed TimeML documents for property
// tests. Every generated document validates without errors; signals may be
// shared between links, cited only by SLINKs or ALINKs, or left unused.

#ifndef SIGNALSCOPE_TESTS_SUPPORT_GENERATOR_H_
#define SIGNALSCOPE_TESTS_SUPPORT_GENERATOR_H_

#include <cstdint>
#include <random>
#include <string>

#include "signalscope/corpus.h"

namespace signalscope::testing {

std::string RandomTimeml(std::mt19937_64 &rng, const std::string &doc_id);

// Between 1 and max_docs documents, identified "g<seed>_<n>".
Corpus RandomCorpus(std::uint64_t seed, int max_docs = 6);

}  // namespace signalscope::testing

#endif  // SIGNALSCOPE_TESTS_SUPPORT_GENERATOR_H_
