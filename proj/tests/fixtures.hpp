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

// Small named graphs. Vertices a, b, c, d are labels 1..4, i.e. indices 0..3.

#ifndef LINWIDTH_TESTS_FIXTURES_HPP_
#define LINWIDTH_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <vector>

#include "linwidth/graph.hpp"
#include "linwidth/layouts.hpp"

namespace fixtures {

// Edges: 0 = ab, 1 = bc, 2 = ac.
inline linwidth::Graph k3() { return linwidth::parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n"); }
inline linwidth::Graph k2() { return linwidth::parse_graph("p 2 1\ne 1 2\n"); }
inline linwidth::Graph k1() { return linwidth::parse_graph("p 1 0\n"); }
// Edges: 0 = ab, 1 = bc.
inline linwidth::Graph p3() { return linwidth::parse_graph("p 3 2\ne 1 2\ne 2 3\n"); }
// Edges: 0 = ab, 1 = bc, 2 = cd.
inline linwidth::Graph p4() { return linwidth::parse_graph("p 4 3\ne 1 2\ne 2 3\ne 3 4\n"); }
// Centre a; edges 0 = ab, 1 = ac, 2 = ad.
inline linwidth::Graph k13() { return linwidth::parse_graph("p 4 3\ne 1 2\ne 1 3\ne 1 4\n"); }
inline linwidth::Graph c4() {
  return linwidth::parse_graph("p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
}
inline linwidth::Graph k4() {
  return linwidth::parse_graph("p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
}

inline linwidth::VertexSet bag(std::initializer_list<int> vs) {
  linwidth::VertexSet out;
  for (int v : vs) out.insert(v);
  return out;
}

inline linwidth::PathDecomposition pd(std::initializer_list<linwidth::VertexSet> bags) {
  return linwidth::PathDecomposition{std::vector<linwidth::VertexSet>(bags)};
}

}  // namespace fixtures

#endif  // LINWIDTH_TESTS_FIXTURES_HPP_
