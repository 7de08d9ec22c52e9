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

#ifndef LINWIDTH_TOOLS_COMMANDS_HPP_
#define LINWIDTH_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace linwidth::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,      // certificate rejected / operation not applicable
  kExitParse = 2,     // unreadable or malformed input
  kExitGuard = 3,     // size guard exceeded
  kExitInternal = 4,  // engines disagree or a certificate failed self-check
  kExitTimeout = 5,
};

enum class Format { kText, kStructured };

struct ComputeArgs {
  std::string input;
  std::string engine = "auto";  // auto | brute | dp2m | closure2n | approx
  std::optional<int> bound;
  std::optional<double> budget_seconds;
  bool guard_override = false;
  Format format = Format::kText;
};

struct VerifyArgs {
  std::string input;
  std::string certificate;
  int claimed_width = 0;
};

struct ConvertArgs {
  std::string input;
  std::string certificate;
  std::string direction;  // layout-to-pd | pd-to-layout
  bool simplify = false;
};

struct GenArgs {
  std::string family;  // gnp | gnm | path | cycle | clique | star | grid
  int n = 0;
  int m = 0;
  double p = 0.5;
  int rows = 0;
  int cols = 0;
  std::uint64_t seed = 0;
};

struct BenchArgs {
  std::string corpus;
  std::vector<std::string> engines = {"dp2m", "closure2n"};
  double budget_seconds = 60.0;
  bool guard_override = false;
  Format format = Format::kText;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace linwidth::cli

#endif  // LINWIDTH_TOOLS_COMMANDS_HPP_
