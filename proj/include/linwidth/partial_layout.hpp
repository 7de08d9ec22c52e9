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

#ifndef LINWIDTH_PARTIAL_LAYOUT_HPP_
#define LINWIDTH_PARTIAL_LAYOUT_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "linwidth/boundary.hpp"
#include "linwidth/errors.hpp"
#include "linwidth/solve_result.hpp"

namespace linwidth {

// An ordering of a subset F of the edges, with the boundary of every prefix.
class PartialLayout {
 public:
  explicit PartialLayout(const Graph& g) : eval_(g) {}

  PartialLayout(const Graph& g, const std::vector<int>& prefix) : eval_(g) {
    for (int e : prefix) push(e);
  }

  void push(int e) {
    if (e < 0 || e >= eval_.graph().m() || eval_.edges().contains(e)) {
      throw PreconditionError("partial layout edge out of range or repeated");
    }
    eval_.add(e);
    order_.push_back(e);
    boundaries_.push_back(eval_.d());
  }

  const std::vector<int>& order() const { return order_; }
  const EdgeSet& edges() const { return eval_.edges(); }
  const std::vector<int>& boundaries() const { return boundaries_; }
  int d() const { return eval_.d(); }
  int d_if_added(int e) const { return eval_.d_if_added(e); }
  int width() const {
    return boundaries_.empty() ? 0 : *std::max_element(boundaries_.begin(), boundaries_.end());
  }
  const Graph& graph() const { return eval_.graph(); }

 private:
  BoundaryEvaluator eval_;
  std::vector<int> order_;
  std::vector<int> boundaries_;
};

// Whether some completion of the edge set `f` keeps every further prefix
// within `bound`. Exhaustive over completions, with failed sets remembered.
// Only whether f itself has width <= bound is left to the caller.
inline bool completes_within(const Graph& g, const EdgeSet& f, int bound) {
  if (g.m() > 64) throw GuardExceeded("completion search", "m > 64");
  const std::uint64_t full = g.m() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.m()) - 1;
  absl::flat_hash_set<std::uint64_t> failed;
  BoundaryEvaluator eval(g);
  f.for_each([&](int e) { eval.add(e); });

  auto search = [&](auto& self, std::uint64_t set) -> bool {
    if (set == full) return true;
    if (failed.contains(set)) return false;
    for (int e = 0; e < g.m(); ++e) {
      if ((set >> e) & 1U) continue;
      if (eval.d_if_added(e) > bound) continue;
      eval.add(e);
      const bool ok = self(self, set | (std::uint64_t{1} << e));
      eval.remove(e);
      if (ok) return true;
    }
    failed.insert(set);
    return false;
  };
  return search(search, f.low_word());
}

// Whether `sigma` is a prefix of some layout of width <= bound.
inline bool is_k_extendable(const PartialLayout& sigma, int bound) {
  return sigma.width() <= bound && completes_within(sigma.graph(), sigma.edges(), bound);
}

// Test oracle for the commitment rule: if e is outside F and
// d(F + e) <= d(F), then sigma is k-extendable iff sigma followed by e is.
// Returns whether the two exhaustive answers agree.
inline bool check_prune_lemma(const Graph& g, const PartialLayout& sigma, int e, int bound) {
  if (&sigma.graph() != &g) {
    throw PreconditionError("partial layout belongs to a different graph");
  }
  if (sigma.width() > bound) {
    throw PreconditionError("partial layout exceeds the bound");
  }
  if (e < 0 || e >= g.m() || sigma.edges().contains(e)) {
    throw PreconditionError("edge must lie outside the partial layout");
  }
  if (sigma.d_if_added(e) > sigma.d()) {
    throw PreconditionError("appending the edge increases the boundary");
  }
  PartialLayout extended = sigma;
  extended.push(e);
  return is_k_extendable(sigma, bound) == is_k_extendable(extended, bound);
}

}  // namespace linwidth

#endif  // LINWIDTH_PARTIAL_LAYOUT_HPP_
