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

#ifndef LINWIDTH_CLOSURE_SEARCH_HPP_
#define LINWIDTH_CLOSURE_SEARCH_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "linwidth/boundary.hpp"
#include "linwidth/graph.hpp"
#include "linwidth/layouts.hpp"
#include "linwidth/solve_result.hpp"

namespace linwidth {

// Table of vertex spans V(F) of closed edge sets F from which no layout of
// width <= bound can be completed. A closed set is the edge set induced by
// its span, so the span alone identifies the state. Scoped to one (graph,
// bound) search.
class MemoTable {
 public:
  bool contains(VertexSet span) const { return refuted_.contains(span.bits()); }
  void insert(VertexSet span) { refuted_.insert(span.bits()); }
  std::uint64_t size() const { return refuted_.size(); }

 private:
  absl::flat_hash_set<std::uint64_t> refuted_;
};

// Memoised search over closed edge sets for a layout of width <= bound.
//
// From a closed set F the search appends any edge e outside F with
// d(F + e) <= bound and continues from the closure (F + e)*. Jumping straight
// to the closure is safe: each edge of (F + e)* \ (F + e) keeps V unchanged,
// so its boundary can only shrink and committing to it loses nothing. A state
// is written to the memo only after all of its moves failed.
//
// States are represented by their vertex span S = V(F); then F is every edge
// inside S, and for e = uv outside F the boundary of F + e is
//   mid(F) \ {u, v}  plus each endpoint w with 0 < c(w) < deg(w),
// where c(w) = |N(w) ∩ S| + 1 if w ∈ S and 1 otherwise.
class ClosureSearch {
 public:
  ClosureSearch(const Graph& g, int bound, Deadline& deadline)
      : g_(g), bound_(bound), deadline_(deadline) {
    for (int v = 0; v < g.n(); ++v) {
      if (g.degree(v) > 0) covered_.insert(v);
    }
  }

  // Whether the closed set `f` extends to a full layout of width <= bound.
  // Throws PreconditionError if `f` is not closed.
  bool is_extendable(const EdgeSet& f) {
    if (f.universe() != g_.m() || !is_closed(g_, f)) {
      throw PreconditionError("is_extendable expects a closed edge set");
    }
    return extendable_from(vertices_of(g_, f));
  }

  // Same, for the closed set induced by `span`. The span must be V(F) of a
  // closed F, i.e. have no vertex isolated inside it.
  bool extendable_from(VertexSet span) {
    steps_.clear();
    const bool ok = bound_ >= 0 && extend(span);
    std::reverse(steps_.begin(), steps_.end());
    return ok;
  }

  // After a successful search: the full layout along the accepting path, each
  // chosen edge followed by the rest of its closure in ascending index order.
  Layout layout_from(VertexSet start) const {
    Layout pi;
    VertexSet span = start;
    for (int e : steps_) {
      pi.order.push_back(e);
      const VertexSet grown = span | g_.endpoints(e);
      for (int f = 0; f < g_.m(); ++f) {
        const VertexSet ends = g_.endpoints(f);
        if (f != e && ends.is_subset_of(grown) && !ends.is_subset_of(span)) {
          pi.order.push_back(f);
        }
      }
      span = grown;
    }
    return pi;
  }

  // Edges chosen by the search on the accepting path (closure edges omitted).
  const std::vector<int>& steps() const { return steps_; }
  const MemoTable& memo() const { return memo_; }
  const SearchStats& stats() const { return stats_; }

 private:
  VertexSet boundary_of_closed(VertexSet span) const {
    VertexSet out;
    span.for_each([&](int v) {
      if (!g_.neighbors(v).is_subset_of(span)) out.insert(v);
    });
    return out;
  }

  bool straddles_after_adding(int w, VertexSet span) const {
    const int inside = span.contains(w) ? (g_.neighbors(w) & span).size() + 1 : 1;
    return inside < g_.degree(w);
  }

  bool extend(VertexSet span) {
    if (covered_.is_subset_of(span)) return true;
    if (memo_.contains(span)) {
      ++stats_.memo_hits;
      return false;
    }
    deadline_.poll();
    ++stats_.states_expanded;

    const VertexSet boundary = boundary_of_closed(span);
    std::vector<std::pair<int, int>> moves;
    for (int e = 0; e < g_.m(); ++e) {
      const Edge& ed = g_.edge(e);
      if (span.contains(ed.u) && span.contains(ed.v)) continue;
      const int d = (boundary - g_.endpoints(e)).size() +
                    (straddles_after_adding(ed.u, span) ? 1 : 0) +
                    (straddles_after_adding(ed.v, span) ? 1 : 0);
      if (d <= bound_) moves.emplace_back(d, e);
    }
    // Prefer moves that grow the boundary least; ties by edge index.
    std::sort(moves.begin(), moves.end());
    for (const auto& [d, e] : moves) {
      if (extend(span | g_.endpoints(e))) {
        steps_.push_back(e);
        return true;
      }
    }
    memo_.insert(span);
    return false;
  }

  const Graph& g_;
  int bound_;
  Deadline& deadline_;
  VertexSet covered_;
  MemoTable memo_;
  std::vector<int> steps_;
  SearchStats stats_;
};

namespace detail {

// Runs `solve_component` on every component with edges and stitches the
// per-component layouts back together in parent edge indices.
template <typename Solve>
SolveResult solve_by_components(const Graph& g, const char* engine, Solve&& solve_component) {
  detail::Stopwatch clock;
  SolveResult result{engine, 0, Layout{}, {}};
  Layout joined;
  for (const Component& c : components(g)) {
    if (c.graph.m() == 0) continue;
    SolveResult part = solve_component(c.graph);
    result.width = std::max(result.width, part.width);
    result.stats.absorb(part.stats);
    for (int e : part.layout().order) {
      joined.order.push_back(c.edge_map[static_cast<std::size_t>(e)]);
    }
  }
  result.certificate = std::move(joined);
  result.stats.seconds = clock.seconds();
  return result;
}

}  // namespace detail

// Whether `g` has a layout of width <= bound, searching the closed sets of
// each component in turn.
inline Decision decide_closure_2n(const Graph& g, int bound, SolverOptions options = {}) {
  detail::enforce_guard("closure2n", "n", g.n(), options.guards.closure_max_vertices,
                        Guards::kClosureHardCap, options.ignore_guards);
  detail::Stopwatch clock;
  Decision out;
  out.feasible = true;
  Layout joined;
  for (const Component& c : components(g)) {
    if (c.graph.m() == 0) continue;
    ClosureSearch search(c.graph, bound, options.deadline);
    const bool ok = search.extendable_from(VertexSet{});
    out.stats.absorb(search.stats());
    out.stats.memo_entries += search.memo().size();
    out.stats.memo_entries_per_bound.emplace_back(bound, search.memo().size());
    if (!ok) {
      out.feasible = false;
      break;
    }
    for (int e : search.layout_from(VertexSet{}).order) {
      joined.order.push_back(c.edge_map[static_cast<std::size_t>(e)]);
    }
  }
  if (out.feasible) out.layout = std::move(joined);
  out.stats.seconds = clock.seconds();
  return out;
}

// Exact linearwidth by memoised search over closed edge sets, O*(2^n).
// Components are solved separately; the width is their maximum.
inline SolveResult lw_closure_2n(const Graph& g, SolverOptions options = {}) {
  detail::enforce_guard("closure2n", "n", g.n(), options.guards.closure_max_vertices,
                        Guards::kClosureHardCap, options.ignore_guards);
  return detail::solve_by_components(g, "closure2n", [&](const Graph& part) {
    SolveResult r{"closure2n", 0, Layout{}, {}};
    // d <= n bounds every width, so the loop always terminates with success.
    for (int k = detail::single_edge_lower_bound(part); k <= part.n(); ++k) {
      ClosureSearch search(part, k, options.deadline);
      const bool ok = search.extendable_from(VertexSet{});
      r.stats.absorb(search.stats());
      r.stats.memo_entries += search.memo().size();
      r.stats.memo_entries_per_bound.emplace_back(k, search.memo().size());
      if (ok) {
        r.width = k;
        r.certificate = search.layout_from(VertexSet{});
        return r;
      }
    }
    throw Error("closure2n: no layout within width n; graph invariants broken");
  });
}

}  // namespace linwidth

#endif  // LINWIDTH_CLOSURE_SEARCH_HPP_
