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

#ifndef LINWIDTH_GRAPH_HPP_
#define LINWIDTH_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linwidth/errors.hpp"
#include "linwidth/sets.hpp"

namespace linwidth {

struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

// Undirected simple graph on at most 64 vertices. Immutable once built.
//
// Vertices carry the 1-based label they had in the input document, so
// certificates can always be reported against the caller's numbering.
class Graph {
 public:
  Graph() = default;

  // Endpoints are 0-based. `labels[v]` is the external label of vertex v and
  // defaults to v + 1. Rejects self-loops, parallel edges, out-of-range
  // endpoints and n > 64 with PreconditionError.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<int> labels = {}) {
    if (n < 0 || n > kMaxVertices) {
      throw PreconditionError("vertex count " + std::to_string(n) +
                              " outside [0, 64]");
    }
    Graph g;
    g.n_ = n;
    g.incident_.resize(static_cast<std::size_t>(n));
    g.neighbors_.resize(static_cast<std::size_t>(n));
    if (labels.empty()) {
      labels.resize(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v + 1;
    }
    if (static_cast<int>(labels.size()) != n) {
      throw PreconditionError("label vector does not match vertex count");
    }
    g.labels_ = std::move(labels);
    g.edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw PreconditionError("edge endpoint out of range");
      }
      if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
      if (g.neighbors_[static_cast<std::size_t>(u)].contains(v)) {
        throw PreconditionError("duplicate edge");
      }
      const int e = static_cast<int>(g.edges_.size());
      g.edges_.push_back({u, v});
      g.incident_[static_cast<std::size_t>(u)].push_back(e);
      g.incident_[static_cast<std::size_t>(v)].push_back(e);
      g.neighbors_[static_cast<std::size_t>(u)].insert(v);
      g.neighbors_[static_cast<std::size_t>(v)].insert(u);
    }
    return g;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const int> incident(int v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const {
    return static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
  }
  VertexSet neighbors(int v) const {
    return neighbors_[static_cast<std::size_t>(v)];
  }
  VertexSet vertices() const { return VertexSet::full(n_); }

  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::span<const int> labels() const { return labels_; }

  VertexSet endpoints(int e) const {
    const Edge& ed = edge(e);
    return VertexSet::single(ed.u) | VertexSet::single(ed.v);
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<VertexSet> neighbors_;
  std::vector<int> labels_;
};

// Parses the edge-list format:
//
//   c <comment>
//   p <n> <m>
//   e <u> <v>      (m times, 1-based labels in [1, n])
//
// Vertices are renumbered 0..n-1 in order of first appearance among the edge
// lines; labels that never appear follow in ascending order. Edge indices
// follow document order.
inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<long long, long long>> raw;
  std::size_t header_line = 0;

  auto malformed = [&](const std::string& why) {
    return ParseError(ParseErrorKind::kMalformedLine, line_no, why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw malformed("second problem line");
      if (!(tokens >> n >> m) || n < 0 || m < 0) {
        throw malformed("expected 'p <n> <m>'");
      }
      std::string extra;
      if (tokens >> extra) throw malformed("trailing token '" + extra + "'");
      if (n > kMaxVertices) {
        throw ParseError(ParseErrorKind::kTooManyVertices, line_no,
                         std::to_string(n) + " vertices, at most 64 supported");
      }
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (tag == "e") {
      if (!have_header) throw malformed("edge before problem line");
      long long u = 0;
      long long v = 0;
      if (!(tokens >> u >> v)) throw malformed("expected 'e <u> <v>'");
      std::string extra;
      if (tokens >> extra) throw malformed("trailing token '" + extra + "'");
      if (u < 1 || v < 1 || u > n || v > n) {
        throw malformed("vertex label outside [1, " + std::to_string(n) + "]");
      }
      if (u == v) {
        throw ParseError(ParseErrorKind::kSelfLoop, line_no,
                         "edge " + std::to_string(u) + " " + std::to_string(v));
      }
      if (static_cast<long long>(raw.size()) >= m) {
        throw malformed("more edge lines than declared");
      }
      for (const auto& [a, b] : raw) {
        if ((a == u && b == v) || (a == v && b == u)) {
          throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                           "edge " + std::to_string(u) + " " + std::to_string(v));
        }
      }
      raw.emplace_back(u, v);
      continue;
    }
    throw malformed("unknown line tag '" + tag + "'");
  }
  if (!have_header) throw malformed("missing problem line");
  if (static_cast<long long>(raw.size()) != m) {
    throw ParseError(ParseErrorKind::kMalformedLine, header_line,
                     "declared " + std::to_string(m) + " edges, found " +
                         std::to_string(raw.size()));
  }

  const int nv = static_cast<int>(n);
  std::vector<int> index_of(static_cast<std::size_t>(nv) + 1, -1);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(nv));
  auto assign = [&](long long label) {
    auto& slot = index_of[static_cast<std::size_t>(label)];
    if (slot < 0) {
      slot = static_cast<int>(labels.size());
      labels.push_back(static_cast<int>(label));
    }
    return slot;
  };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    const int a = assign(u);
    const int b = assign(v);
    edges.emplace_back(a, b);
  }
  for (int label = 1; label <= nv; ++label) assign(label);
  return Graph::from_edges(nv, edges, std::move(labels));
}

// Inverse of parse_graph, using the external labels.
inline std::string serialize_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(g.label(e.u)) + " " + std::to_string(g.label(e.v)) + "\n";
  }
  return out;
}

inline VertexSet vertices_of(const Graph& g, const EdgeSet& f) {
  VertexSet out;
  f.for_each([&](int e) { out |= g.endpoints(e); });
  return out;
}

// Vertices reachable from `start` inside `within`.
inline VertexSet reachable(const Graph& g, int start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  return g.n() > 0 && reachable(g, 0, g.vertices()) == g.vertices();
}

// A connected component with maps from its local indices back to the parent.
struct Component {
  Graph graph;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

// Vertex-induced connected components, ordered by smallest parent vertex.
// Local vertex and edge order follow the parent's order; labels are kept.
inline std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    const int root = std::countr_zero(unseen.bits());
    const VertexSet part = reachable(g, root, g.vertices());
    unseen -= part;

    Component c;
    c.vertex_map = part.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> labels;
    for (std::size_t i = 0; i < c.vertex_map.size(); ++i) {
      local[static_cast<std::size_t>(c.vertex_map[i])] = static_cast<int>(i);
      labels.push_back(g.label(c.vertex_map[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e) {
      const Edge& ed = g.edge(e);
      if (part.contains(ed.u)) {
        c.edge_map.push_back(e);
        edges.emplace_back(local[static_cast<std::size_t>(ed.u)],
                           local[static_cast<std::size_t>(ed.v)]);
      }
    }
    c.graph = Graph::from_edges(static_cast<int>(c.vertex_map.size()), edges,
                                std::move(labels));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace linwidth

#endif  // LINWIDTH_GRAPH_HPP_
