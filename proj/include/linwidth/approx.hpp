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

#ifndef LINWIDTH_APPROX_HPP_
#define LINWIDTH_APPROX_HPP_

#include <algorithm>
#include <numeric>

#include "linwidth/layouts.hpp"
#include "linwidth/pathwidth.hpp"
#include "linwidth/solve_result.hpp"

namespace linwidth {

// Linearwidth to within +1: an optimal path decomposition of each component
// turned into a layout. Graphs whose components all have at most two vertices
// have linearwidth 0 and are answered exactly.
inline SolveResult lw_approx(const Graph& g, SolverOptions options = {}) {
  detail::Stopwatch clock;
  const std::vector<Component> parts = components(g);
  const bool trivial = std::all_of(parts.begin(), parts.end(),
                                   [](const Component& c) { return c.graph.n() <= 2; });
  SolveResult result{"approx", 0, Layout{}, {}};
  Layout joined;
  if (trivial) {
    joined.order.resize(static_cast<std::size_t>(g.m()));
    std::iota(joined.order.begin(), joined.order.end(), 0);
  } else {
    for (const Component& c : parts) {
      if (c.graph.m() == 0) continue;
      SolveResult pw = pw_exact(c.graph, options);
      result.stats.absorb(pw.stats);
      for (int e : pd_to_layout(c.graph, pw.decomposition()).order) {
        joined.order.push_back(c.edge_map[static_cast<std::size_t>(e)]);
      }
    }
  }
  result.width = layout_width(g, joined);
  result.certificate = std::move(joined);
  result.stats.seconds = clock.seconds();
  return result;
}

}  // namespace linwidth

#endif  // LINWIDTH_APPROX_HPP_
