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

#ifndef LINWIDTH_CERTIFICATE_IO_HPP_
#define LINWIDTH_CERTIFICATE_IO_HPP_

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linwidth/errors.hpp"
#include "linwidth/graph.hpp"
#include "linwidth/layouts.hpp"
#include "linwidth/solve_result.hpp"

// Text form of certificates, always in the input's external numbering:
//
//   layout              pd
//   3 1 2               1 2
//   end                 2 3
//                       end
//
// A layout is one line of 1-based edge labels (the edge's position in the
// input document). A decomposition is one line of vertex labels per bag; a
// lone "-" stands for an empty bag. Lines starting with '#' or 'c' and blank
// lines are ignored, so a full result document is itself a certificate file.
namespace linwidth {

inline std::string format_layout(const Layout& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.order.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(pi.order[i] + 1);
  }
  return out;
}

inline std::string format_bag(const Graph& g, VertexSet bag) {
  if (bag.empty()) return "-";
  std::vector<int> labels;
  bag.for_each([&](int v) { labels.push_back(g.label(v)); });
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(labels[i]);
  }
  return out;
}

inline std::string serialize_certificate(const Graph& g, const Certificate& cert) {
  std::string out;
  if (const auto* pi = std::get_if<Layout>(&cert)) {
    out = "layout\n" + format_layout(*pi) + "\n";
  } else {
    out = "pd\n";
    for (VertexSet bag : std::get<PathDecomposition>(cert).bags) {
      out += format_bag(g, bag) + "\n";
    }
  }
  return out + "end\n";
}

// Throws InvalidCertificate on unknown labels or a missing section. Whether
// the layout is a permutation, or the bags a decomposition, is left to the
// verifiers.
inline Certificate parse_certificate(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  enum class Section { kNone, kLayout, kPd, kDone } section = Section::kNone;
  Layout pi;
  PathDecomposition pd;
  bool layout_line_seen = false;
  bool is_pd = false;

  std::vector<int> vertex_of_label(static_cast<std::size_t>(g.n()) + 1, -1);
  for (int v = 0; v < g.n(); ++v) {
    vertex_of_label[static_cast<std::size_t>(g.label(v))] = v;
  }

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first[0] == '#' || first == "c") continue;
    if (section == Section::kDone) continue;
    if (first == "end") {
      if (section == Section::kNone) throw InvalidCertificate("'end' outside a section");
      section = Section::kDone;
      continue;
    }
    if (section == Section::kNone) {
      if (first == "layout") {
        section = Section::kLayout;
      } else if (first == "pd") {
        section = Section::kPd;
        is_pd = true;
      } else {
        throw InvalidCertificate("expected 'layout' or 'pd', found '" + first + "'");
      }
      continue;
    }
    std::istringstream items(line);
    std::string item;
    if (section == Section::kLayout) {
      if (layout_line_seen) throw InvalidCertificate("layout spans more than one line");
      layout_line_seen = true;
      while (items >> item) {
        int label = 0;
        try {
          label = std::stoi(item);
        } catch (const std::exception&) {
          throw InvalidCertificate("bad edge label '" + item + "'");
        }
        if (label < 1 || label > g.m()) {
          throw InvalidCertificate("edge label " + item + " outside [1, " +
                                   std::to_string(g.m()) + "]");
        }
        pi.order.push_back(label - 1);
      }
    } else {
      VertexSet bag;
      if (first != "-") {
        while (items >> item) {
          int label = 0;
          try {
            label = std::stoi(item);
          } catch (const std::exception&) {
            throw InvalidCertificate("bad vertex label '" + item + "'");
          }
          if (label < 1 || label > g.n() ||
              vertex_of_label[static_cast<std::size_t>(label)] < 0) {
            throw InvalidCertificate("unknown vertex label " + item);
          }
          bag.insert(vertex_of_label[static_cast<std::size_t>(label)]);
        }
      }
      pd.bags.push_back(bag);
    }
  }
  if (section == Section::kNone) throw InvalidCertificate("no 'layout' or 'pd' section");
  if (is_pd) return pd;
  return pi;
}

}  // namespace linwidth

#endif  // LINWIDTH_CERTIFICATE_IO_HPP_
