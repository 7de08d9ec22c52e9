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

#ifndef LINWIDTH_SUBSET_DP_HPP_
#define LINWIDTH_SUBSET_DP_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "linwidth/boundary.hpp"
#include "linwidth/solve_result.hpp"

namespace linwidth {
namespace detail {

// Set of edge subsets (as 64-bit masks) known not to reach E within the
// bound. Dense bitmap for small m, hash set above that.
class SubsetTable {
 public:
  static constexpr int kDenseLimit = 28;

  SubsetTable(int m, std::size_t capacity) : capacity_(capacity) {
    if (m <= kDenseLimit) {
      dense_.assign((std::size_t{1} << m) / 64 + 1, 0);
    }
  }

  bool contains(std::uint64_t key) const {
    if (!dense_.empty()) return (dense_[key >> 6] >> (key & 63)) & 1U;
    return sparse_.contains(key);
  }

  void insert(std::uint64_t key) {
    if (!dense_.empty()) {
      std::uint64_t& word = dense_[key >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (key & 63);
      if (!(word & bit)) ++size_;
      word |= bit;
      return;
    }
    // Past capacity new refutations are dropped; lookups stay sound.
    if (sparse_.size() < capacity_ && sparse_.insert(key).second) ++size_;
  }

  std::uint64_t size() const { return size_; }

 private:
  std::vector<std::uint64_t> dense_;
  absl::flat_hash_set<std::uint64_t> sparse_;
  std::size_t capacity_;
  std::uint64_t size_ = 0;
};

// Reachability of E from the empty set through edge subsets whose boundary
// stays within the bound, memoising refuted subsets.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, int bound, Deadline& deadline, std::size_t capacity)
      : g_(g),
        bound_(bound),
        deadline_(deadline),
        counts_(g),
        refuted_(g.m(), capacity),
        full_(g.m() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.m()) - 1) {}

  bool run() {
    path_.clear();
    const bool ok = extend(0);
    std::reverse(path_.begin(), path_.end());
    return ok;
  }

  Layout layout() const { return Layout{path_}; }
  std::uint64_t table_size() const { return refuted_.size(); }
  const SearchStats& stats() const { return stats_; }

 private:
  bool extend(std::uint64_t f) {
    if (f == full_) return true;
    if (refuted_.contains(f)) {
      ++stats_.memo_hits;
      return false;
    }
    deadline_.poll();
    ++stats_.states_expanded;

    std::array<std::pair<int, int>, 64> moves;
    int count = 0;
    for (std::uint64_t rest = full_ & ~f; rest != 0; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      const int next = counts_.d_if_added(e);
      if (next <= bound_) moves[static_cast<std::size_t>(count++)] = {next, e};
    }
    std::sort(moves.begin(), moves.begin() + count);
    for (int i = 0; i < count; ++i) {
      const int e = moves[static_cast<std::size_t>(i)].second;
      counts_.add(e);
      const bool ok = extend(f | (std::uint64_t{1} << e));
      counts_.remove(e);
      if (ok) {
        path_.push_back(e);
        return true;
      }
    }
    refuted_.insert(f);
    return false;
  }

  const Graph& g_;
  int bound_;
  Deadline& deadline_;
  IncidenceCounter counts_;
  SubsetTable refuted_;
  std::uint64_t full_;
  std::vector<int> path_;
  SearchStats stats_;
};

inline constexpr std::size_t kDefaultTableCapacity = std::size_t{1} << 26;

}  // namespace detail

// Whether some layout has width at most `bound`, searching edge subsets.
inline Decision decide_dp_2m(const Graph& g, int bound, SolverOptions options = {}) {
  detail::enforce_guard("dp2m", "m", g.m(), options.guards.dp_max_edges,
                        Guards::kDpHardCap, options.ignore_guards);
  detail::Stopwatch clock;
  Decision out;
  detail::SubsetSearch search(g, bound, options.deadline,
                              detail::kDefaultTableCapacity);
  out.feasible = bound >= 0 && search.run();
  if (out.feasible) out.layout = search.layout();
  out.stats = search.stats();
  out.stats.memo_entries = search.table_size();
  out.stats.memo_entries_per_bound.emplace_back(bound, search.table_size());
  out.stats.seconds = clock.seconds();
  return out;
}

// Exact linearwidth by subset reachability, trying bounds upward from a
// trivial lower bound with a fresh table per bound.
inline SolveResult lw_dp_2m(const Graph& g, SolverOptions options = {}) {
  detail::enforce_guard("dp2m", "m", g.m(), options.guards.dp_max_edges,
                        Guards::kDpHardCap, options.ignore_guards);
  detail::Stopwatch clock;
  SolveResult result{"dp2m", 0, Layout{}, {}};
  const int start = std::max(detail::single_edge_lower_bound(g), options.known_lower_bound);
  for (int k = start; k <= g.n(); ++k) {
    Decision step = decide_dp_2m(g, k, options);
    result.stats.absorb(step.stats);
    if (step.feasible) {
      result.width = k;
      result.certificate = std::move(*step.layout);
      result.stats.seconds = clock.seconds();
      return result;
    }
  }
  throw Error("dp2m: no layout within width n; graph invariants broken");
}

}  // namespace linwidth

#endif  // LINWIDTH_SUBSET_DP_HPP_
