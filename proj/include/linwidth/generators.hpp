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

#ifndef LINWIDTH_GENERATORS_HPP_
#define LINWIDTH_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "linwidth/errors.hpp"
#include "linwidth/graph.hpp"

// Graph families for tests and benchmarks. Random families draw raw words
// from std::mt19937_64, whose output sequence is fixed by the standard, and
// avoid the library distributions, whose algorithms are not. The same seed
// therefore yields the same graph on every platform.
namespace linwidth::gen {

namespace detail {

inline void check_n(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("vertex count must lie in [0, 64]");
  }
}

inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace detail

// Erdos-Renyi G(n, p): each pair independently, in lexicographic order.
inline Graph gnp(int n, double p, std::uint64_t seed) {
  detail::check_n(n);
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (detail::unit_draw(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

// Uniform G(n, m): a partial Fisher-Yates shuffle of all pairs.
inline Graph gnm(int n, int m, std::uint64_t seed) {
  detail::check_n(n);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (m < 0 || m > static_cast<int>(pairs.size())) {
    throw PreconditionError("m must lie in [0, n(n-1)/2]");
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    const std::size_t j = i + detail::below(rng, pairs.size() - i);
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(static_cast<std::size_t>(m));
  return Graph::from_edges(n, pairs);
}

inline Graph path(int n) {
  detail::check_n(n);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  detail::check_n(n);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph clique(int n) {
  detail::check_n(n);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

// Vertex 0 joined to n - 1 leaves.
inline Graph star(int n) {
  detail::check_n(n);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

inline Graph grid(int rows, int cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("grid sides must be non-negative");
  detail::check_n(rows * cols);
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

// Disjoint union; vertices of b follow those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.n(), e.v + a.n());
  return Graph::from_edges(a.n() + b.n(), edges);
}

// Every graph on exactly n labelled vertices (2^(n(n-1)/2) of them), one per
// subset of the pair list. Small n only.
template <typename Fn>
void for_each_graph(int n, Fn&& fn) {
  if (n < 0 || n > 7) throw PreconditionError("exhaustive enumeration needs n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    fn(Graph::from_edges(n, edges));
  }
}

}  // namespace linwidth::gen

#endif  // LINWIDTH_GENERATORS_HPP_
