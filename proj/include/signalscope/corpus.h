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

#ifndef SIGNALSCOPE_CORPUS_H_
#define SIGNALSCOPE_CORPUS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signalscope/model.h"
#include "signalscope/parser.h"

namespace signalscope {

struct Corpus {
  std::string label;
  std::vector<Document> documents;
};

struct LoadOptions {
  std::string label;
  // Directory holding "<doc stem>.pos" sidecars.
  std::optional<std::string> pos_dir;
  int jobs = 1;
};

struct LoadedCorpus {
  Corpus corpus;
  std::vector<ParseDiagnostics> diagnostics;  // one per document
  std::vector<std::string> notes;             // e.g. missing sidecars
};

// Files are kept in argument order; directories are searched recursively for
// *.tml files, which are taken in lexicographic path order.
std::vector<std::string> ExpandInputs(const std::vector<std::string> &paths);

// Reads and parses every input. Documents are identified by file stem.
// Throws IoError (naming the path) for unreadable files, malformed XML and
// misaligned sidecars.
LoadedCorpus LoadCorpus(const std::vector<std::string> &paths,
                        const LoadOptions &options = {});

std::string ReadFile(const std::string &path);

// Tag used when no sidecar tag is available: closed-class lookup, then
// suffix and shape heuristics. Always returns a Penn Treebank tag.
std::string FallbackTag(std::string_view surface);

// Where part-of-speech tags come from.
enum class PosSource {
  kSidecar,              // sidecar tags only; untagged tokens have no POS
  kSidecarWithFallback,  // sidecar tags, else FallbackTag()
  kFallback,             // FallbackTag() for every token
};

std::optional<std::string> TokenTag(const Document &doc, std::size_t index,
                                    PosSource source);

}  // namespace signalscope

#endif  // SIGNALSCOPE_CORPUS_H_
