// Copyright 2026 The linwidth Authors
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

#ifndef LINWIDTH_ERRORS_HPP_
#define LINWIDTH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace linwidth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kMalformedLine,
  kSelfLoop,
  kDuplicateEdge,
  kTooManyVertices,
};

inline const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedLine: return "malformed line";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kTooManyVertices: return "too many vertices";
  }
  return "unknown";
}

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + to_string(kind) + ": " +
              what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// A solver was asked to run on an instance larger than its configured guard.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::string engine, std::string detail)
      : Error(engine + ": size guard exceeded: " + detail),
        engine_(std::move(engine)) {}
  const std::string& engine() const { return engine_; }

 private:
  std::string engine_;
};

// Caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  Timeout() : Error("time budget exhausted") {}
};

}  // namespace linwidth

#endif  // LINWIDTH_ERRORS_HPP_
