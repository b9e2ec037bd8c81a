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

// Reading and writing of TimeML 1.2 inline XML.

#ifndef SIGNALSCOPE_PARSER_H_
#define SIGNALSCOPE_PARSER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signalscope/model.h"

namespace signalscope {

struct ParseDiagnostics {
  struct Entry {
    std::string location;  // "line:column"
    std::string message;
  };

  std::string doc_id;
  std::vector<Entry> recovered;
};

struct ParseResult {
  Document document;
  ParseDiagnostics diagnostics;
};

// Parses one TimeML document. Throws ParseError on malformed XML. Irregular
// but well-formed input (unknown elements, unknown enum values, links citing
// event ids instead of instance ids) is tolerated and noted in the
// diagnostics. The document id is `doc_id` when non-empty, otherwise the text
// of a DOCID element, otherwise empty.
ParseResult ParseTimeml(std::string_view xml, std::string_view doc_id = {});

// Writes a document back as inline TimeML. Link and instance elements are
// emitted just before the root element closes.
std::string SerializeTimeml(const Document &doc);

// Reads a CoNLL-style sidecar (token TAB tag per line, blank line between
// sentences) and copies its tags and sentence boundaries onto `doc`. Throws
// AlignmentError naming the first index where the sidecar token differs from
// the document token, or where one of the two runs out.
void AttachPosSidecar(Document &doc, std::string_view sidecar);

}  // namespace signalscope

#endif  // SIGNALSCOPE_PARSER_H_
