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

#ifndef SIGNALSCOPE_ERROR_H_
#define SIGNALSCOPE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace signalscope {

// Base class for all failures raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed XML. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A POS sidecar that does not line up with the document tokens.
class AlignmentError : public Error {
 public:
  AlignmentError(const std::string &message, std::size_t index)
      : Error(message), index_(index) {}

  // First token index at which the sidecar and the tokenizer disagree.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// A link or instance refers to an id that does not exist in the document.
class ResolveError : public Error {
 public:
  explicit ResolveError(const std::string &missing_id)
      : Error("unresolved reference: " + missing_id), missing_id_(missing_id) {}

  const std::string &missing_id() const { return missing_id_; }

 private:
  std::string missing_id_;
};

class UnknownExpressionError : public Error {
 public:
  explicit UnknownExpressionError(const std::string &expression)
      : Error("expression not in lexicon: " + expression),
        expression_(expression) {}

  const std::string &expression() const { return expression_; }

 private:
  std::string expression_;
};

// Caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string &path, const std::string &message)
      : Error(path + ": " + message), path_(path) {}

  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace signalscope

#endif  // SIGNALSCOPE_ERROR_H_
