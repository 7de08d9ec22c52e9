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

#ifndef LINWIDTH_SOLVE_RESULT_HPP_
#define LINWIDTH_SOLVE_RESULT_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linwidth/errors.hpp"
#include "linwidth/layouts.hpp"

namespace linwidth {

// Default size guards keep each engine within about a minute. Hard caps are
// representation limits and cannot be lifted.
struct Guards {
  int brute_max_edges = 9;
  int dp_max_edges = 28;
  int closure_max_vertices = 32;
  int pw_max_vertices = 26;

  static constexpr int kBruteHardCap = 12;
  static constexpr int kDpHardCap = 64;
  static constexpr int kClosureHardCap = kMaxVertices;
  static constexpr int kPwHardCap = 28;
};

// Cooperative wall-clock limit, polled from the inner loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}
  static Deadline after(std::chrono::duration<double> budget) {
    return Deadline(Clock::now() +
                    std::chrono::duration_cast<Clock::duration>(budget));
  }

  bool bounded() const { return at_.has_value(); }

  void poll() {
    if (!at_ || (++ticks_ & 0x3FF) != 0) return;
    if (Clock::now() >= *at_) throw Timeout();
  }

 private:
  std::optional<Clock::time_point> at_;
  std::uint32_t ticks_ = 0;
};

struct SolverOptions {
  Guards guards;
  // Lift the soft guards; hard caps still apply.
  bool ignore_guards = false;
  Deadline deadline;
  // A width the caller has already proven no layout can beat. Exact engines
  // start their bound search here instead of at the trivial bound.
  int known_lower_bound = 0;
};

struct SearchStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t memo_entries = 0;  // summed over every table built
  std::uint64_t memo_hits = 0;
  // (bound, entries) for each fresh table, in the order they were built.
  std::vector<std::pair<int, std::uint64_t>> memo_entries_per_bound;
  double seconds = 0.0;

  std::uint64_t max_memo_entries() const {
    std::uint64_t best = 0;
    for (const auto& [k, n] : memo_entries_per_bound) best = std::max(best, n);
    return best;
  }

  void absorb(const SearchStats& other) {
    states_expanded += other.states_expanded;
    memo_entries += other.memo_entries;
    memo_hits += other.memo_hits;
    memo_entries_per_bound.insert(memo_entries_per_bound.end(),
                                  other.memo_entries_per_bound.begin(),
                                  other.memo_entries_per_bound.end());
  }
};

using Certificate = std::variant<Layout, PathDecomposition>;

struct SolveResult {
  std::string engine;
  int width = 0;
  Certificate certificate;
  SearchStats stats;

  bool has_layout() const { return std::holds_alternative<Layout>(certificate); }
  const Layout& layout() const { return std::get<Layout>(certificate); }
  const PathDecomposition& decomposition() const {
    return std::get<PathDecomposition>(certificate);
  }
};

// Answer to "is there a layout of width at most k?".
struct Decision {
  bool feasible = false;
  std::optional<Layout> layout;
  SearchStats stats;
};

namespace detail {

inline void enforce_guard(const char* engine, const char* what, int value,
                          int soft, int hard, bool ignore_soft) {
  const int limit = ignore_soft ? hard : std::min(soft, hard);
  if (value > limit) {
    throw GuardExceeded(engine, std::string(what) + " = " + std::to_string(value) +
                                    " > " + std::to_string(limit));
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(Deadline::Clock::now() - start_).count();
  }

 private:
  Deadline::Clock::time_point start_ = Deadline::Clock::now();
};

// Cheap lower bound on the width of any layout: its first prefix is a single
// edge. Meaningful only once there are two or more edges.
inline int single_edge_lower_bound(const Graph& g) {
  if (g.m() < 2) return 0;
  int best = 2;
  for (const Edge& e : g.edges()) {
    best = std::min(best, (g.degree(e.u) > 1 ? 1 : 0) + (g.degree(e.v) > 1 ? 1 : 0));
  }
  return best;
}

}  // namespace detail
}  // namespace linwidth

#endif  // LINWIDTH_SOLVE_RESULT_HPP_
