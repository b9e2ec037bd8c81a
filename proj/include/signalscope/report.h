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

// Renders statistics, labels and suggestions as CSV, JSON or plain text.
//
// CSV columns (fixed):
//   usage       n_signals,n_used_by_tlink,n_used_by_alink,n_used_by_slink,
//               n_tlinks_with_signal,n_signals_multi_tlink
//   histogram   tlinks_per_signal,signals
//   pos         pos,frequency,proportion
//   ambiguity   expression,count_in_corpus,count_as_signal,proportion
//               (paired: the last three again with an _after suffix)
//   matrix      expression,total,BEFORE,AFTER,...,ENDED_BY
//
// CSV proportions are percentages with one decimal place; JSON carries the
// raw fraction at full precision.

#ifndef SIGNALSCOPE_REPORT_H_
#define SIGNALSCOPE_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signalscope/lint.h"
#include "signalscope/predictor.h"
#include "signalscope/rules.h"
#include "signalscope/stats.h"
#include "signalscope/validate.h"

namespace signalscope {

enum class Format { kCsv, kJson, kText };

std::optional<Format> ParseFormat(std::string_view name);
std::string_view ToString(Format format);

// "77.8" for 0.7777...
std::string Percent(double fraction);
std::string CsvField(std::string_view field);

std::string RenderUsage(const UsageSummary &usage, const std::string &label,
                        Format format);
std::string RenderHistogram(const SignalHistogram &histogram,
                            const std::string &label, Format format);
std::string RenderPos(const PosDistribution &dist, const std::string &label,
                      Format format);
std::string RenderAmbiguity(const AmbiguityTable &table,
                            const std::string &label, Format format);
std::string RenderPairedAmbiguity(const std::vector<PairedAmbiguityRow> &rows,
                                  const std::string &before_label,
                                  const std::string &after_label,
                                  Format format);
std::string RenderMatrix(const RelationCountMatrix &matrix,
                         const std::string &label, Format format);

std::string RenderValidation(const std::vector<ValidationReport> &reports,
                             Format format);

struct LabelledOccurrence {
  Occurrence occurrence;
  SenseLabel label;
};
std::string RenderOccurrences(const std::vector<LabelledOccurrence> &items,
                              Format format);

// JSON format is JSON lines.
std::string RenderLint(const std::vector<CurationSuggestion> &items,
                       Format format);

std::string RenderEvaluation(const EvaluationResult &result,
                             const std::string &label, Format format);

std::string RenderPrediction(std::string_view expression,
                             const Prediction &prediction, Format format);

// Explanatory note attached to an ambiguity row, or empty.
std::string_view ExpressionNote(std::string_view expression);

}  // namespace signalscope

#endif  // SIGNALSCOPE_REPORT_H_
