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

#ifndef LINWIDTH_BOUNDARY_HPP_
#define LINWIDTH_BOUNDARY_HPP_

#include <vector>

#include "linwidth/errors.hpp"
#include "linwidth/graph.hpp"
#include "linwidth/sets.hpp"

namespace linwidth {

// Vertices with an incident edge both inside and outside `f`.
//
// Computed from per-vertex counts: u is on the boundary iff
// 0 < |edges of f at u| < deg(u).
inline VertexSet mid(const Graph& g, const EdgeSet& f) {
  std::vector<int> inside(static_cast<std::size_t>(g.n()), 0);
  f.for_each([&](int e) {
    const Edge& ed = g.edge(e);
    ++inside[static_cast<std::size_t>(ed.u)];
    ++inside[static_cast<std::size_t>(ed.v)];
  });
  VertexSet out;
  for (int v = 0; v < g.n(); ++v) {
    const int c = inside[static_cast<std::size_t>(v)];
    if (c > 0 && c < g.degree(v)) out.insert(v);
  }
  return out;
}

// V(f) ∩ V(E \ f), spelled out literally. Slower; kept as the reference form.
inline VertexSet mid_by_definition(const Graph& g, const EdgeSet& f) {
  return vertices_of(g, f) & vertices_of(g, f.complement());
}

inline int boundary_size(const Graph& g, const EdgeSet& f) {
  return mid(g, f).size();
}

// All edges of the subgraph induced by V(f).
inline EdgeSet closure(const Graph& g, const EdgeSet& f) {
  const VertexSet span = vertices_of(g, f);
  EdgeSet out(g.m());
  for (int e = 0; e < g.m(); ++e) {
    if (g.endpoints(e).is_subset_of(span)) out.insert(e);
  }
  return out;
}

inline bool is_closed(const Graph& g, const EdgeSet& f) {
  return closure(g, f) == f;
}

// Checks d(x + e) - d(x) >= d(y + e) - d(y) for one triple.
inline bool check_submodularity(const Graph& g, const EdgeSet& x,
                                const EdgeSet& y, int e) {
  if (!x.is_subset_of(y)) {
    throw PreconditionError("submodularity triple requires x ⊆ y");
  }
  if (e < 0 || e >= g.m() || y.contains(e)) {
    throw PreconditionError("submodularity triple requires e ∈ E \\ y");
  }
  EdgeSet xe = x;
  xe.insert(e);
  EdgeSet ye = y;
  ye.insert(e);
  return boundary_size(g, xe) - boundary_size(g, x) >=
         boundary_size(g, ye) - boundary_size(g, y);
}

namespace detail {

// Per-vertex inside-counts and the resulting boundary mask, with no record of
// which edges are inside. The hot loops of the solvers use this directly.
class IncidenceCounter {
 public:
  explicit IncidenceCounter(const Graph& g)
      : g_(&g), inside_(static_cast<std::size_t>(g.n()), 0) {}

  VertexSet mid() const { return mid_; }
  int d() const { return mid_.size(); }
  int inside_count(int v) const { return inside_[static_cast<std::size_t>(v)]; }

  void add(int e) {
    const Edge& ed = g_->edge(e);
    bump(ed.u, +1);
    bump(ed.v, +1);
  }
  void remove(int e) {
    const Edge& ed = g_->edge(e);
    bump(ed.u, -1);
    bump(ed.v, -1);
  }

  VertexSet mid_if_added(int e) const {
    const Edge& ed = g_->edge(e);
    VertexSet out = mid_ - g_->endpoints(e);
    if (straddles_after(ed.u, +1)) out.insert(ed.u);
    if (straddles_after(ed.v, +1)) out.insert(ed.v);
    return out;
  }
  int d_if_added(int e) const { return mid_if_added(e).size(); }

 private:
  bool straddles_after(int v, int delta) const {
    const int c = inside_[static_cast<std::size_t>(v)] + delta;
    return c > 0 && c < g_->degree(v);
  }

  void bump(int v, int delta) {
    if (straddles_after(v, delta)) {
      mid_.insert(v);
    } else {
      mid_.erase(v);
    }
    inside_[static_cast<std::size_t>(v)] += delta;
  }

  const Graph* g_;
  std::vector<int> inside_;
  VertexSet mid_;
};

}  // namespace detail

// Tracks a growing/shrinking edge set with per-vertex inside-counts so that
// the boundary can be updated in O(1) per edge.
class BoundaryEvaluator {
 public:
  explicit BoundaryEvaluator(const Graph& g) : g_(&g), counts_(g), set_(g.m()) {}

  const Graph& graph() const { return *g_; }
  const EdgeSet& edges() const { return set_; }
  VertexSet mid() const { return counts_.mid(); }
  int d() const { return counts_.d(); }
  int inside_count(int v) const { return counts_.inside_count(v); }

  // Adding a member or removing a non-member is a precondition violation.
  void add(int e) {
    if (set_.contains(e)) throw PreconditionError("edge already in the set");
    set_.insert(e);
    counts_.add(e);
  }
  void remove(int e) {
    if (!set_.contains(e)) throw PreconditionError("edge not in the set");
    set_.erase(e);
    counts_.remove(e);
  }

  // Boundary after adding e (e not yet in the set), without mutating.
  VertexSet mid_if_added(int e) const { return counts_.mid_if_added(e); }
  int d_if_added(int e) const { return counts_.d_if_added(e); }

 private:
  const Graph* g_;
  detail::IncidenceCounter counts_;
  EdgeSet set_;
};

}  // namespace linwidth

#endif  // LINWIDTH_BOUNDARY_HPP_
