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

#ifndef LINWIDTH_BRUTEFORCE_HPP_
#define LINWIDTH_BRUTEFORCE_HPP_

#include <algorithm>
#include <climits>
#include <numeric>
#include <vector>

#include "linwidth/boundary.hpp"
#include "linwidth/solve_result.hpp"

namespace linwidth {

// Minimum width over all m! layouts, by plain enumeration. No pruning: every
// permutation is visited, so this is the definitional reference answer.
inline SolveResult lw_bruteforce(const Graph& g, SolverOptions options = {}) {
  detail::enforce_guard("brute", "m", g.m(), options.guards.brute_max_edges,
                        Guards::kBruteHardCap, options.ignore_guards);
  detail::Stopwatch clock;
  const int m = g.m();
  detail::IncidenceCounter counts(g);
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> best_order = order;
  int best = m == 0 ? 0 : INT_MAX;
  SearchStats stats;

  auto place = [&](auto& self, int depth, int running_max) -> void {
    options.deadline.poll();
    if (depth == m) {
      ++stats.states_expanded;
      if (running_max < best) {
        best = running_max;
        best_order = order;
      }
      return;
    }
    for (int i = depth; i < m; ++i) {
      std::swap(order[static_cast<std::size_t>(depth)], order[static_cast<std::size_t>(i)]);
      const int e = order[static_cast<std::size_t>(depth)];
      counts.add(e);
      self(self, depth + 1, std::max(running_max, counts.d()));
      counts.remove(e);
      std::swap(order[static_cast<std::size_t>(depth)], order[static_cast<std::size_t>(i)]);
    }
  };
  if (m > 0) place(place, 0, 0);

  stats.seconds = clock.seconds();
  return SolveResult{"brute", best, Layout{best_order}, std::move(stats)};
}

inline Decision decide_bruteforce(const Graph& g, int bound,
                                  SolverOptions options = {}) {
  SolveResult r = lw_bruteforce(g, options);
  Decision out;
  out.feasible = r.width <= bound;
  if (out.feasible) out.layout = r.layout();
  out.stats = std::move(r.stats);
  return out;
}

}  // namespace linwidth

#endif  // LINWIDTH_BRUTEFORCE_HPP_
