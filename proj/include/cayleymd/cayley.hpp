// Copyright 2026 The cayleymd Authors
//
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

#pragma once

// Cayley graphs Cay(G,S) on finite Abelian groups: u ~ v iff v - u is in S.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cayleymd/errors.hpp"
#include "cayleymd/graph.hpp"
#include "cayleymd/group.hpp"

namespace cayleymd {

/// Inverse-closed, identity-free subset of a group, stored sorted.
class ConnectionSet {
 public:
  ConnectionSet(const AbelianGroup& group, std::vector<GroupElement> elements) {
    for (const auto& g : elements) {
      if (!group.contains(g)) throw GroupShapeError("connection set element outside " + group.literal());
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const GroupElement e = group.identity();
    if (std::binary_search(elements.begin(), elements.end(), e)) {
      throw IdentityInConnectionSetError("connection set contains the identity " + group.format(e));
    }
    for (const auto& g : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), group.inverse(g))) {
        throw NotInverseClosedError("connection set is not inverse-closed: missing inverse of " +
                                    group.format(g));
      }
    }
    elements_ = std::move(elements);
  }

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  std::vector<GroupElement> elements_;
};

/// Vertex i is group.element_at(i); labels are the formatted elements.
inline Graph build_cayley(const AbelianGroup& group, const ConnectionSet& set) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    const GroupElement u = group.element_at(i);
    labels.push_back(group.format(u));
    for (const auto& s : set.elements()) {
      const std::size_t j = group.index_of(group.add(u, s));
      if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(group.order(), edges, std::move(labels));
}

/// All connection sets of size <= max_size, each once, ordered
/// lexicographically by their sorted element-index lists.
inline std::vector<ConnectionSet> enumerate_connection_sets(const AbelianGroup& group,
                                                            std::size_t max_size,
                                                            bool generating_only = false) {
  // Inverse orbits {g} or {g, -g}; a connection set is a union of orbits.
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 1; i < group.order(); ++i) {
    const std::size_t j = group.index_of(group.inverse(group.element_at(i)));
    if (i == j) {
      orbits.push_back({i});
    } else if (i < j) {
      orbits.push_back({i, j});
    }
  }

  std::vector<std::vector<std::size_t>> chosen;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t next_orbit) -> void {
    if (!current.empty()) chosen.push_back(current);
    for (std::size_t k = next_orbit; k < orbits.size(); ++k) {
      if (current.size() + orbits[k].size() > max_size) continue;
      current.insert(current.end(), orbits[k].begin(), orbits[k].end());
      self(self, k + 1);
      current.resize(current.size() - orbits[k].size());
    }
  };
  rec(rec, 0);
  for (auto& c : chosen) std::sort(c.begin(), c.end());
  std::sort(chosen.begin(), chosen.end());

  std::vector<ConnectionSet> out;
  for (const auto& c : chosen) {
    std::vector<GroupElement> elems;
    for (std::size_t idx : c) elems.push_back(group.element_at(idx));
    if (generating_only && !group.is_generating(elems)) continue;
    out.emplace_back(group, std::move(elems));
  }
  return out;
}

/// "1,5,3" over single-factor groups, "(1,0);(0,2);(1,2)" over products.
inline ConnectionSet parse_connection_set(const AbelianGroup& group, std::string_view text) {
  const std::string t = detail::trim(text);
  std::vector<GroupElement> elems;
  if (t.empty()) return ConnectionSet(group, {});
  if (t.find('(') != std::string::npos) {
    for (const auto& part : detail::split(t, ';')) {
      if (part.empty()) continue;
      elems.push_back(group.parse_element(part));
    }
  } else {
    if (group.rank() != 1) {
      throw ParseError("connection set over " + group.literal() +
                       " needs tuple syntax such as '(1,0);(0,1)'");
    }
    for (const auto& part : detail::split(t, t.find(';') != std::string::npos ? ';' : ',')) {
      if (part.empty()) continue;
      elems.push_back(group.element({detail::parse_int(part)}));
    }
  }
  return ConnectionSet(group, std::move(elems));
}

inline std::string format_connection_set(const AbelianGroup& group, const ConnectionSet& set) {
  std::string out;
  const char sep = group.rank() == 1 ? ',' : ';';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += sep;
    out += group.format(set.elements()[i]);
  }
  return out;
}

}  // namespace cayleymd
