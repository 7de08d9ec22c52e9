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

#ifndef LINWIDTH_SETS_HPP_
#define LINWIDTH_SETS_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace linwidth {

inline constexpr int kMaxVertices = 64;

// Subset of the vertex universe, one bit per vertex index.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  // Visits members in ascending order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Subset of the edge universe {0, ..., m-1}. Sized at construction; binary
// operations require both operands to share the same universe.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}

  static EdgeSet full(int universe) {
    EdgeSet s(universe);
    s.bits_.set();
    return s;
  }
  template <typename Range>
  static EdgeSet of(int universe, const Range& edges) {
    EdgeSet s(universe);
    for (int e : edges) s.insert(e);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.none(); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool contains(int e) const { return bits_.test(static_cast<std::size_t>(e)); }
  void insert(int e) { bits_.set(static_cast<std::size_t>(e)); }
  void erase(int e) { bits_.reset(static_cast<std::size_t>(e)); }

  bool is_subset_of(const EdgeSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  EdgeSet complement() const {
    EdgeSet s = *this;
    s.bits_.flip();
    return s;
  }

  EdgeSet operator|(const EdgeSet& o) const { return EdgeSet(bits_ | o.bits_); }
  EdgeSet operator&(const EdgeSet& o) const { return EdgeSet(bits_ & o.bits_); }
  EdgeSet operator-(const EdgeSet& o) const { return EdgeSet(bits_ - o.bits_); }
  EdgeSet& operator|=(const EdgeSet& o) { bits_ |= o.bits_; return *this; }
  EdgeSet& operator&=(const EdgeSet& o) { bits_ &= o.bits_; return *this; }
  EdgeSet& operator-=(const EdgeSet& o) { bits_ -= o.bits_; return *this; }
  bool operator==(const EdgeSet&) const = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      fn(static_cast<int>(i));
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(bits_.count());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  // Low 64 bits; exact when universe() <= 64.
  std::uint64_t low_word() const {
    std::uint64_t w = 0;
    for_each([&](int e) {
      if (e < 64) w |= std::uint64_t{1} << e;
    });
    return w;
  }
  static EdgeSet from_word(int universe, std::uint64_t word) {
    assert(universe <= 64);
    EdgeSet s(universe);
    for (; word != 0; word &= word - 1) s.insert(std::countr_zero(word));
    return s;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  explicit EdgeSet(Bits bits) : bits_(std::move(bits)) {}

  Bits bits_;
};

}  // namespace linwidth

template <>
struct std::hash<linwidth::VertexSet> {
  std::size_t operator()(linwidth::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // LINWIDTH_SETS_HPP_
