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

// Command-line front end.
//
//   signalscope validate      PATH...
//   signalscope stats         PATH... --table {usage|histogram|pos|ambiguity|matrix|all}
//   signalscope disambiguate  PATH...
//   signalscope lint          PATH...
//   signalscope train         PATH... [--canonical]
//   signalscope predict       --matrix FILE --expression WORD
//   signalscope evaluate      PATH... --protocol {resub|lodo}
//
// Data goes to the output stream (or --output), diagnostics to the error
// stream. Exit codes: 0 success, 1 validation errors (validate only),
// 2 usage error, 3 I/O or parse failure.

#ifndef SIGNALSCOPE_CLI_H_
#define SIGNALSCOPE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace signalscope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// `args` excludes the program name. `interactive` selects text output when
// no --format is given; otherwise JSON is the default.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err, bool interactive = false);

}  // namespace signalscope::cli

#endif  // SIGNALSCOPE_CLI_H_
