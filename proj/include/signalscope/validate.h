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

#ifndef SIGNALSCOPE_VALIDATE_H_
#define SIGNALSCOPE_VALIDATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signalscope/model.h"

namespace signalscope {

enum class IssueKind {
  kEmptyId,
  kDuplicateId,
  kTokenOrder,
  kSpanOutOfBounds,
  kSpanMisaligned,
  kEmptySignal,
  kSignalSurfaceMismatch,
  kMissingDct,
  kMultipleDct,
  kDanglingEventRef,
  kDanglingEntityRef,
  kDanglingSignalRef,
  kSelfLink,
  kUnusedSignal,  // warning only
};

std::string_view ToString(IssueKind kind);

struct ValidationIssue {
  std::string doc_id;
  std::string element_id;
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
};

// Checks every document invariant. Problems are reported, never thrown; each
// violation yields exactly one error. Signals cited by no link are warnings.
ValidationReport ValidateDocument(const Document &doc);

// Dereferences one link argument. Throws ResolveError naming the missing id.
Entity ResolveEntity(const Document &doc, const EntityRef &ref);

// Source and target of a link, instances dereferenced to their events.
std::pair<Entity, Entity> ResolveLinkEntities(const Document &doc,
                                              const TLink &link);
std::pair<Entity, Entity> ResolveLinkEntities(const Document &doc,
                                              const UntypedLink &link);

// Head and optional qualifier of a signal phrase.
//
// "very shortly after" annotated as a single signal gives head "after" with
// the qualitative qualifier "very shortly". For "two weeks after", TimeBank
// annotates only "after" as the signal and "two weeks" as a DURATION timex;
// such a timex ending at most two tokens before the head becomes the
// qualifier.
struct SignalStructure {
  struct Qualifier {
    enum class Kind { kQualitative, kDuration };

    Kind kind = Kind::kQualitative;
    TokenRange tokens;
    std::string timex_id;  // set for kDuration

    bool operator==(const Qualifier &) const = default;
  };

  std::string signal_id;
  TokenRange head;
  std::optional<Qualifier> qualifier;

  bool operator==(const SignalStructure &) const = default;
};

SignalStructure ExtractSignalStructure(const Document &doc, const Signal &sig);

// Words that may precede a signal head inside the signal span and qualify it.
bool IsQualitativeQualifier(std::string_view lowercase_word);

}  // namespace signalscope

#endif  // SIGNALSCOPE_VALIDATE_H_
