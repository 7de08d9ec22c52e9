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

#ifndef LINWIDTH_LAYOUTS_HPP_
#define LINWIDTH_LAYOUTS_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "linwidth/boundary.hpp"
#include "linwidth/errors.hpp"
#include "linwidth/graph.hpp"
#include "linwidth/sets.hpp"

namespace linwidth {

// A total order on the edges: order[i] is the (i+1)-th edge placed.
struct Layout {
  std::vector<int> order;

  std::size_t size() const { return order.size(); }
  bool operator==(const Layout&) const = default;
};

// A sequence of vertex bags.
struct PathDecomposition {
  std::vector<VertexSet> bags;

  std::size_t size() const { return bags.size(); }
  bool operator==(const PathDecomposition&) const = default;
};

inline bool is_permutation_of_edges(const Graph& g, const Layout& pi) {
  if (static_cast<int>(pi.size()) != g.m()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.m()), 0);
  for (int e : pi.order) {
    if (e < 0 || e >= g.m() || seen[static_cast<std::size_t>(e)]) return false;
    seen[static_cast<std::size_t>(e)] = 1;
  }
  return true;
}

inline void require_valid_layout(const Graph& g, const Layout& pi) {
  if (!is_permutation_of_edges(g, pi)) {
    throw InvalidCertificate("layout is not a permutation of the " +
                             std::to_string(g.m()) + " edges");
  }
}

// Boundary size after each prefix; entry i belongs to the prefix of length i+1.
inline std::vector<int> prefix_boundaries(const Graph& g, const Layout& pi) {
  require_valid_layout(g, pi);
  BoundaryEvaluator eval(g);
  std::vector<int> out;
  out.reserve(pi.size());
  for (int e : pi.order) {
    eval.add(e);
    out.push_back(eval.d());
  }
  return out;
}

inline int layout_width(const Graph& g, const Layout& pi) {
  const std::vector<int> ds = prefix_boundaries(g, pi);
  return ds.empty() ? 0 : *std::max_element(ds.begin(), ds.end());
}

struct LayoutCheck {
  bool ok = true;
  // 1-based length of the shortest prefix whose boundary exceeds the bound;
  // 0 when ok or when the layout is not a permutation.
  int violating_prefix = 0;
  int violating_boundary = 0;
  std::string reason;

  explicit operator bool() const { return ok; }
};

inline LayoutCheck verify_layout(const Graph& g, const Layout& pi, int bound) {
  LayoutCheck check;
  if (!is_permutation_of_edges(g, pi)) {
    check.ok = false;
    check.reason = "not a permutation of the edge set";
    return check;
  }
  if (bound < 0) {
    check.ok = false;
    check.reason = "width is never negative";
    return check;
  }
  BoundaryEvaluator eval(g);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    eval.add(pi.order[i]);
    if (eval.d() > bound) {
      check.ok = false;
      check.violating_prefix = static_cast<int>(i) + 1;
      check.violating_boundary = eval.d();
      check.reason = "prefix " + std::to_string(i + 1) + " has boundary " +
                     std::to_string(eval.d()) + " > " + std::to_string(bound);
      return check;
    }
  }
  return check;
}

// Largest bag size minus one.
inline int pd_width(const PathDecomposition& pd) {
  if (pd.bags.empty()) throw PreconditionError("decomposition has no bags");
  int widest = 0;
  for (VertexSet bag : pd.bags) widest = std::max(widest, bag.size());
  return widest - 1;
}

enum class PdViolation {
  kNone,
  kUnknownVertex,
  kVertexCoverage,
  kEdgeCoverage,
  kConsecutiveness,
};

inline const char* to_string(PdViolation v) {
  switch (v) {
    case PdViolation::kNone: return "none";
    case PdViolation::kUnknownVertex: return "unknown-vertex";
    case PdViolation::kVertexCoverage: return "vertex-coverage";
    case PdViolation::kEdgeCoverage: return "edge-coverage";
    case PdViolation::kConsecutiveness: return "consecutiveness";
  }
  return "unknown";
}

struct PdCheck {
  PdViolation violation = PdViolation::kNone;
  int vertex = -1;  // offending vertex, if any
  int edge = -1;    // offending edge, if any

  bool ok() const { return violation == PdViolation::kNone; }
  explicit operator bool() const { return ok(); }
};

inline PdCheck verify_path_decomposition(const Graph& g,
                                         const PathDecomposition& pd) {
  PdCheck check;
  VertexSet covered;
  for (VertexSet bag : pd.bags) covered |= bag;
  if (!covered.is_subset_of(g.vertices())) {
    check.violation = PdViolation::kUnknownVertex;
    check.vertex = std::countr_zero((covered - g.vertices()).bits());
    return check;
  }
  if (covered != g.vertices()) {
    check.violation = PdViolation::kVertexCoverage;
    check.vertex = std::countr_zero((g.vertices() - covered).bits());
    return check;
  }
  for (int e = 0; e < g.m(); ++e) {
    const VertexSet ends = g.endpoints(e);
    const bool inside = std::any_of(pd.bags.begin(), pd.bags.end(),
                                    [&](VertexSet b) { return ends.is_subset_of(b); });
    if (!inside) {
      check.violation = PdViolation::kEdgeCoverage;
      check.edge = e;
      return check;
    }
  }
  // A vertex that left a bag may not come back.
  VertexSet retired;
  VertexSet previous;
  for (VertexSet bag : pd.bags) {
    const VertexSet back = bag & retired;
    if (!back.empty()) {
      check.violation = PdViolation::kConsecutiveness;
      check.vertex = std::countr_zero(back.bits());
      return check;
    }
    retired |= previous - bag;
    previous = bag;
  }
  return check;
}

// Bag i is mid(first i-1 edges) ∪ endpoints(i-th edge); one bag per edge.
// For a connected graph other than K1 and K2 the result is a valid
// decomposition whose width is at most the layout's width.
inline PathDecomposition layout_to_pd(const Graph& g, const Layout& pi) {
  if (!is_connected(g)) {
    throw PreconditionError("layout_to_pd requires a connected graph");
  }
  require_valid_layout(g, pi);
  PathDecomposition pd;
  pd.bags.reserve(pi.size());
  BoundaryEvaluator eval(g);
  for (int e : pi.order) {
    pd.bags.push_back(eval.mid() | g.endpoints(e));
    eval.add(e);
  }
  return pd;
}

// Drops bags contained in a neighbouring bag until none remain. Preserves
// validity and never increases width.
inline PathDecomposition simplify_pd(PathDecomposition pd) {
  bool changed = true;
  while (changed && pd.bags.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < pd.bags.size(); ++i) {
      const bool under_prev = i > 0 && pd.bags[i].is_subset_of(pd.bags[i - 1]);
      const bool under_next =
          i + 1 < pd.bags.size() && pd.bags[i].is_subset_of(pd.bags[i + 1]);
      if (under_prev || under_next) {
        pd.bags.erase(pd.bags.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return pd;
}

// Orders edges by the first bag containing both endpoints, ties by index.
// Every boundary vertex of a prefix ending inside bag i lies in bag i, so the
// width is at most pd_width + 1.
inline Layout pd_to_layout(const Graph& g, const PathDecomposition& pd) {
  const PdCheck check = verify_path_decomposition(g, pd);
  if (!check.ok()) {
    throw InvalidCertificate(std::string("invalid path decomposition: ") +
                             to_string(check.violation));
  }
  std::vector<std::size_t> first_bag(static_cast<std::size_t>(g.m()));
  for (int e = 0; e < g.m(); ++e) {
    const VertexSet ends = g.endpoints(e);
    std::size_t i = 0;
    while (!ends.is_subset_of(pd.bags[i])) ++i;
    first_bag[static_cast<std::size_t>(e)] = i;
  }
  Layout pi;
  pi.order.resize(static_cast<std::size_t>(g.m()));
  std::iota(pi.order.begin(), pi.order.end(), 0);
  std::stable_sort(pi.order.begin(), pi.order.end(), [&](int a, int b) {
    return first_bag[static_cast<std::size_t>(a)] < first_bag[static_cast<std::size_t>(b)];
  });
  return pi;
}

}  // namespace linwidth

#endif  // LINWIDTH_LAYOUTS_HPP_
