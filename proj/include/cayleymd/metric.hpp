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

// Resolving sets and exact metric dimension.
//
// The exact search enumerates landmark sets in lexicographic order of vertex
// indices, so the reported witness is always the lexicographically first
// resolving set of minimum size. Pruning only discards branches that cannot
// contain a resolving set:
//   * twins: a resolving set holds all but at most one vertex of every twin
//     class;
//   * refinement: r more landmarks split each representation class into at
//     most (diam + 1)^r parts;
//   * pairs: a resolving pair has both degrees <= 3 and a unique geodesic
//     between its members.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayleymd/errors.hpp"
#include "cayleymd/graph.hpp"

namespace cayleymd {

using MetricRepresentation = std::vector<std::uint32_t>;
using VertexPair = std::pair<Vertex, Vertex>;

/// Landmarks plus the verdict: resolving, or the lexicographically smallest
/// pair of distinct vertices sharing a representation.
struct ResolvingWitness {
  std::vector<Vertex> landmarks;
  std::optional<VertexPair> collision;

  bool resolving() const { return !collision.has_value(); }
};

struct MetricDimensionResult {
  std::optional<std::size_t> dimension;  // empty when above the cap
  std::vector<Vertex> landmarks;         // lexicographically first witness
  std::size_t cap = 0;
  std::size_t lower_bound = 0;           // from twins and the path test

  bool exceeds_cap() const { return !dimension.has_value(); }
};

inline constexpr std::size_t kDefaultDimensionCap = 5;

/// r(u|W).
inline MetricRepresentation representation(const DistanceMatrix& dist, Vertex u,
                                           std::span<const Vertex> landmarks) {
  MetricRepresentation r;
  r.reserve(landmarks.size());
  for (Vertex w : landmarks) r.push_back(dist.finite(u, w));
  return r;
}

namespace detail {

inline void require_connected(const DistanceMatrix& dist) {
  if (!dist.all_finite()) {
    throw DisconnectedGraphError("metric dimension is undefined on a disconnected graph");
  }
}

inline void check_landmarks(std::size_t n, std::span<const Vertex> landmarks) {
  if (landmarks.empty()) throw Error("landmark set must be nonempty");
  std::set<Vertex> seen;
  for (Vertex w : landmarks) {
    if (w >= n) throw VertexRangeError("landmark " + std::to_string(w) + " out of range");
    if (!seen.insert(w).second) throw Error("duplicate landmark " + std::to_string(w));
  }
}

/// Geodesic counts from `source` to every vertex.
inline std::vector<PathCount> shortest_path_counts_from(const Graph& g, Vertex source,
                                                        std::span<const std::uint32_t> dist_row) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return dist_row[a] < dist_row[b]; });
  std::vector<PathCount> count(n);
  count[source] = 1;
  for (Vertex x : order) {
    if (x == source) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist_row[y] + 1 == dist_row[x]) count[x] += count[y];
    }
  }
  return count;
}

inline bool pair_resolves(std::span<const std::uint32_t> dense, std::size_t n, Vertex a, Vertex b,
                          std::vector<std::uint32_t>& stamp, std::uint32_t& epoch, std::uint32_t width) {
  ++epoch;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t key = dense[a * n + x] * width + dense[b * n + x];
    if (stamp[key] == epoch) return false;
    stamp[key] = epoch;
  }
  return true;
}

/// Lexicographic DFS for a resolving set of exactly `k` landmarks.
class ExactSearch {
 public:
  ExactSearch(std::span<const std::uint32_t> dense, std::size_t n,
              const std::vector<std::vector<Vertex>>& twins)
      : dense_(dense), n_(n), width_(1) {
    for (std::uint32_t d : dense) width_ = std::max<std::uint32_t>(width_, d + 1);
    class_of_twin_.assign(n, 0);
    for (std::size_t c = 0; c < twins.size(); ++c) {
      for (Vertex v : twins[c]) class_of_twin_[v] = c;
      twin_size_.push_back(twins[c].size());
    }
    scratch_.assign(n * width_, 0);
    labels_.assign(n * width_, 0);
  }

  std::optional<std::vector<Vertex>> find(std::size_t k) {
    k_ = k;
    chosen_.clear();
    twin_chosen_.assign(twin_size_.size(), 0);
    std::vector<std::uint32_t> classes(n_, 0);
    if (dfs(0, classes, 1)) return chosen_;
    return std::nullopt;
  }

 private:
  bool feasible(Vertex next_free) const {
    // Twin classes still short of |C| - 1 members must fit in the remaining
    // slots, using only vertices with index >= next_free.
    std::size_t deficit = 0;
    std::vector<std::size_t> available(twin_size_.size(), 0);
    for (std::size_t v = next_free; v < n_; ++v) ++available[class_of_twin_[v]];
    for (std::size_t c = 0; c < twin_size_.size(); ++c) {
      const std::size_t need = twin_size_[c] - 1;
      if (twin_chosen_[c] >= need) continue;
      const std::size_t missing = need - twin_chosen_[c];
      if (available[c] < missing) return false;
      deficit += missing;
    }
    return deficit <= k_ - chosen_.size();
  }

  bool dfs(Vertex start, const std::vector<std::uint32_t>& classes, std::size_t class_count) {
    const std::size_t slots = k_ - chosen_.size();
    if (slots == 0) return class_count == n_;
    // Refinement bound: class_count * width^slots must reach n.
    {
      std::size_t reach = class_count;
      for (std::size_t i = 0; i < slots && reach < n_; ++i) reach *= width_;
      if (reach < n_) return false;
    }
    std::vector<std::uint32_t> refined(n_);
    for (Vertex w = start; w + slots <= n_; ++w) {
      chosen_.push_back(w);
      ++twin_chosen_[class_of_twin_[w]];
      if (feasible(w + 1)) {
        ++epoch_;
        if (epoch_ == 0) {
          std::fill(scratch_.begin(), scratch_.end(), 0);
          epoch_ = 1;
        }
        std::size_t next_count = 0;
        for (std::size_t x = 0; x < n_; ++x) {
          const std::size_t key = static_cast<std::size_t>(classes[x]) * width_ + dense_[w * n_ + x];
          if (scratch_[key] != epoch_) {
            scratch_[key] = epoch_;
            labels_[key] = static_cast<std::uint32_t>(next_count++);
          }
          refined[x] = labels_[key];
        }
        if (dfs(w + 1, refined, next_count)) return true;
      }
      --twin_chosen_[class_of_twin_[w]];
      chosen_.pop_back();
    }
    return false;
  }

  std::span<const std::uint32_t> dense_;
  std::size_t n_;
  std::uint32_t width_;
  std::size_t k_ = 0;
  std::vector<Vertex> chosen_;
  std::vector<std::size_t> class_of_twin_;
  std::vector<std::size_t> twin_size_;
  std::vector<std::size_t> twin_chosen_;
  std::vector<std::uint32_t> scratch_;  // epoch stamps keyed by (class, distance)
  std::vector<std::uint32_t> labels_;
  std::uint32_t epoch_ = 0;
};

}  // namespace detail

inline ResolvingWitness is_resolving(const Graph& g, const DistanceMatrix& dist,
                                     std::span<const Vertex> landmarks) {
  detail::require_connected(dist);
  const std::size_t n = g.vertex_count();
  detail::check_landmarks(n, landmarks);
  std::map<MetricRepresentation, std::vector<Vertex>> classes;
  for (Vertex u = 0; u < n; ++u) classes[representation(dist, u, landmarks)].push_back(u);
  ResolvingWitness out{std::vector<Vertex>(landmarks.begin(), landmarks.end()), std::nullopt};
  for (const auto& [rep, members] : classes) {
    if (members.size() < 2) continue;
    VertexPair p{members[0], members[1]};
    if (!out.collision || p < *out.collision) out.collision = p;
  }
  return out;
}

/// Vertices with equal open or equal closed neighbourhoods; classes ordered
/// by smallest member.
inline std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto twins = [&](Vertex u, Vertex v) {
    std::vector<Vertex> nu, nv;
    for (Vertex x : g.neighbors(u)) {
      if (x != v) nu.push_back(x);
    }
    for (Vertex x : g.neighbors(v)) {
      if (x != u) nv.push_back(x);
    }
    return nu == nv;
  };
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    out.push_back({u});
    assigned[u] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!assigned[v] && twins(u, v)) {
        out.back().push_back(v);
        assigned[v] = 1;
      }
    }
  }
  return out;
}

/// Sum of (|C| - 1) over twin classes.
inline std::size_t twin_lower_bound(const std::vector<std::vector<Vertex>>& classes) {
  std::size_t b = 0;
  for (const auto& c : classes) b += c.size() - 1;
  return b;
}

/// First resolving pair in lexicographic order, if any. Candidates must have
/// both degrees <= 3 and a unique geodesic between them before the full
/// injectivity check runs.
inline std::optional<VertexPair> dim2_search(const Graph& g, const DistanceMatrix& dist) {
  const std::size_t n = g.vertex_count();
  const std::vector<std::uint32_t> dense = dist.dense();
  if (n < 2) return std::nullopt;
  std::uint32_t width = 1;
  for (std::uint32_t d : dense) width = std::max(width, d + 1);
  std::vector<std::uint32_t> stamp(static_cast<std::size_t>(width) * width, 0);
  std::uint32_t epoch = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) > 3) continue;
    const auto counts =
        detail::shortest_path_counts_from(g, u, std::span<const std::uint32_t>(dense).subspan(u * n, n));
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) > 3 || counts[v] != 1) continue;
      if (detail::pair_resolves(dense, n, u, v, stamp, epoch, width)) return VertexPair{u, v};
    }
  }
  return std::nullopt;
}

/// Every resolving pair, unfiltered, in lexicographic order.
inline std::vector<VertexPair> resolving_pairs(const Graph& g, const DistanceMatrix& dist) {
  const std::size_t n = g.vertex_count();
  const std::vector<std::uint32_t> dense = dist.dense();
  std::uint32_t width = 1;
  for (std::uint32_t d : dense) width = std::max(width, d + 1);
  std::vector<std::uint32_t> stamp(static_cast<std::size_t>(width) * width, 0);
  std::uint32_t epoch = 0;
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (detail::pair_resolves(dense, n, u, v, stamp, epoch, width)) out.emplace_back(u, v);
    }
  }
  return out;
}

/// Smallest k <= cap admitting a resolving k-set, with the lexicographically
/// first such set.
inline MetricDimensionResult metric_dimension(const Graph& g, const DistanceMatrix& dist,
                                              std::size_t cap = kDefaultDimensionCap) {
  if (cap < 1) throw Error("dimension cap must be >= 1");
  detail::require_connected(dist);
  const std::size_t n = g.vertex_count();
  MetricDimensionResult out;
  out.cap = cap;
  if (n <= 1) {
    out.dimension = 0;
    return out;
  }
  if (is_path_graph(g)) {
    out.lower_bound = 1;
    out.dimension = 1;
    for (Vertex u = 0; u < n; ++u) {
      if (g.degree(u) <= 1) {
        out.landmarks = {u};
        break;
      }
    }
    return out;
  }

  const auto twins = twin_classes(g);
  out.lower_bound = std::max<std::size_t>(2, twin_lower_bound(twins));
  if (out.lower_bound > cap) return out;

  if (out.lower_bound == 2) {
    if (auto pair = dim2_search(g, dist)) {
      out.dimension = 2;
      out.landmarks = {pair->first, pair->second};
      return out;
    }
  }

  const std::vector<std::uint32_t> dense = dist.dense();
  detail::ExactSearch search(dense, n, twins);
  for (std::size_t k = std::max<std::size_t>(3, out.lower_bound); k <= std::min(cap, n); ++k) {
    if (auto w = search.find(k)) {
      out.dimension = k;
      out.landmarks = std::move(*w);
      return out;
    }
  }
  return out;
}

}  // namespace cayleymd
