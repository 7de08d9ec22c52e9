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

#ifndef LINWIDTH_PATHWIDTH_HPP_
#define LINWIDTH_PATHWIDTH_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "linwidth/graph.hpp"
#include "linwidth/layouts.hpp"
#include "linwidth/solve_result.hpp"

namespace linwidth {
namespace detail {

// Vertices of `placed` that still have a neighbour outside it.
inline VertexSet vertex_boundary(const Graph& g, VertexSet placed) {
  VertexSet out;
  placed.for_each([&](int v) {
    if (!g.neighbors(v).is_subset_of(placed)) out.insert(v);
  });
  return out;
}

// Vertex separation number of a connected graph by DP over vertex subsets:
//   best[S] = max(|boundary(S)|, min_{v in S} best[S \ v]).
// Returns an optimal vertex order.
inline std::vector<int> optimal_vertex_order(const Graph& g, Deadline& deadline,
                                             SearchStats& stats) {
  const int n = g.n();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    deadline.poll();
    const VertexSet placed{s};
    int lowest = n;
    placed.for_each([&](int v) {
      lowest = std::min<int>(lowest, best[s & ~(std::uint32_t{1} << v)]);
    });
    best[s] = static_cast<std::uint8_t>(std::max(lowest, vertex_boundary(g, placed).size()));
  }
  stats.states_expanded += std::uint64_t{full} + 1;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    const VertexSet placed{s};
    const int cost = vertex_boundary(g, placed).size();
    int pick = -1;
    placed.for_each([&](int v) {
      const std::uint32_t rest = s & ~(std::uint32_t{1} << v);
      if (pick < 0 && std::max<int>(cost, best[rest]) == best[s]) pick = v;
    });
    order[static_cast<std::size_t>(pos)] = pick;
    s &= ~(std::uint32_t{1} << pick);
  }
  return order;
}

}  // namespace detail

// Bag i holds the i-th vertex together with every earlier vertex that still
// has a later neighbour. Width equals the order's vertex separation.
inline PathDecomposition vertex_order_to_pd(const Graph& g, const std::vector<int>& order) {
  PathDecomposition pd;
  VertexSet placed;
  for (int v : order) {
    pd.bags.push_back(detail::vertex_boundary(g, placed) | VertexSet::single(v));
    placed.insert(v);
  }
  return pd;
}

// Exact pathwidth (as vertex separation number) with a decomposition
// certificate. Components are solved separately and their bags concatenated.
inline SolveResult pw_exact(const Graph& g, SolverOptions options = {}) {
  detail::Stopwatch clock;
  SolveResult result{"pw", 0, PathDecomposition{}, {}};
  PathDecomposition joined;
  for (const Component& c : components(g)) {
    detail::enforce_guard("pw", "component n", c.graph.n(), options.guards.pw_max_vertices,
                          Guards::kPwHardCap, options.ignore_guards);
    const std::vector<int> order =
        detail::optimal_vertex_order(c.graph, options.deadline, result.stats);
    const PathDecomposition part = vertex_order_to_pd(c.graph, order);
    result.width = std::max(result.width, pd_width(part));
    for (VertexSet bag : part.bags) {
      VertexSet mapped;
      bag.for_each([&](int v) { mapped.insert(c.vertex_map[static_cast<std::size_t>(v)]); });
      joined.bags.push_back(mapped);
    }
  }
  if (joined.bags.empty()) joined.bags.emplace_back();
  result.certificate = std::move(joined);
  result.stats.seconds = clock.seconds();
  return result;
}

}  // namespace linwidth

#endif  // LINWIDTH_PATHWIDTH_HPP_
