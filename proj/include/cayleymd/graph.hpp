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

// Undirected simple graphs and the BFS distance layer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayleymd/errors.hpp"

namespace cayleymd {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Geodesic length; empty when the pair lies in different components.
using Distance = std::optional<std::uint32_t>;

/// Number of geodesics. Grows combinatorially (hypercubes), so unbounded.
using PathCount = boost::multiprecision::cpp_int;

class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Duplicate edges are merged; self-loops
  /// and out-of-range endpoints are rejected. `labels` is empty or has size n.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {})
      : adjacency_(n), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n) {
      throw VertexRangeError("label count " + std::to_string(labels_.size()) +
                             " does not match vertex count " + std::to_string(n));
    }
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw VertexRangeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") out of range for " + std::to_string(n) + " vertices");
      }
      if (u == v) throw VertexRangeError("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex u) const {
    check(u);
    return adjacency_[u];
  }
  std::size_t degree(Vertex u) const { return neighbors(u).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    auto n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex u) const {
    check(u);
    return labels_.empty() ? std::to_string(u) : labels_[u];
  }

  /// Same adjacency, new labels.
  Graph with_labels(std::vector<std::string> labels) const {
    auto e = edges();
    return Graph(vertex_count(), e, std::move(labels));
  }

 private:
  void check(Vertex u) const {
    if (u >= adjacency_.size()) {
      throw VertexRangeError("vertex " + std::to_string(u) + " out of range for " +
                             std::to_string(adjacency_.size()) + " vertices");
    }
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Geodesic distances from `source`.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw VertexRangeError("BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<Distance> dist(g.vertex_count());
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Distance> entries) : n_(n), d_(std::move(entries)) {
    if (d_.size() != n * n) throw VertexRangeError("distance matrix needs n*n entries");
  }

  std::size_t size() const { return n_; }
  Distance at(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  /// Distance for a pair known to be connected.
  std::uint32_t finite(Vertex u, Vertex v) const {
    const Distance d = at(u, v);
    if (!d) {
      throw UnreachablePairError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                 " lie in different components");
    }
    return *d;
  }
  std::span<const Distance> row(Vertex u) const {
    check(u);
    return std::span<const Distance>(d_).subspan(static_cast<std::size_t>(u) * n_, n_);
  }

  bool all_finite() const {
    return std::all_of(d_.begin(), d_.end(), [](const Distance& d) { return d.has_value(); });
  }

  /// Largest finite entry (0 for the empty or single-vertex graph).
  std::uint32_t diameter() const {
    std::uint32_t best = 0;
    for (const Distance& d : d_) {
      if (d) best = std::max(best, *d);
    }
    return best;
  }

  /// Row-major copy with every entry finite; throws on a disconnected matrix.
  std::vector<std::uint32_t> dense() const {
    std::vector<std::uint32_t> out(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (!d_[i]) throw DisconnectedGraphError("graph is disconnected");
      out[i] = *d_[i];
    }
    return out;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  void check(Vertex u) const {
    if (u >= n_) throw VertexRangeError("vertex " + std::to_string(u) + " out of range");
  }

  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Distance> entries;
  entries.reserve(n * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::all_of(d.begin(), d.end(), [](const Distance& x) { return x.has_value(); });
}

/// BFS 2-colouring over every component.
inline bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_regular(const Graph& g, std::size_t k) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != k) return false;
  }
  return true;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) best = std::max(best, g.degree(u));
  return best;
}

/// Connected, n-1 edges, max degree <= 2.
inline bool is_path_graph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 1 && g.edge_count() == n - 1 && max_degree(g) <= 2 && is_connected(g);
}

inline bool is_cycle_graph(const Graph& g) {
  return g.vertex_count() >= 3 && is_regular(g, 2) && is_connected(g);
}

/// Number of distinct geodesics from u to v (1 when u == v).
inline PathCount count_shortest_paths(const Graph& g, Vertex u, Vertex v, const DistanceMatrix& dist) {
  const std::uint32_t target = dist.finite(u, v);
  const std::size_t n = g.vertex_count();
  auto from_u = dist.row(u);
  std::vector<std::vector<Vertex>> layers(target + 1);
  for (Vertex x = 0; x < n; ++x) {
    if (from_u[x] && *from_u[x] <= target) layers[*from_u[x]].push_back(x);
  }
  std::vector<PathCount> count(n);
  count[u] = 1;
  for (std::uint32_t level = 1; level <= target; ++level) {
    for (Vertex x : layers[level]) {
      for (Vertex y : g.neighbors(x)) {
        if (from_u[y] && *from_u[y] + 1 == level) count[x] += count[y];
      }
    }
  }
  return count[v];
}

/// For every edge u~v and every w, |d(u,w) - d(v,w)| <= 1.
inline bool distance_step_check(const Graph& g, const DistanceMatrix& dist) {
  if (dist.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges()) {
    auto ru = dist.row(u);
    auto rv = dist.row(v);
    for (std::size_t w = 0; w < ru.size(); ++w) {
      if (ru[w].has_value() != rv[w].has_value()) return false;
      if (!ru[w]) continue;
      const auto a = static_cast<std::int64_t>(*ru[w]);
      const auto b = static_cast<std::int64_t>(*rv[w]);
      if (a - b > 1 || b - a > 1) return false;
    }
  }
  return true;
}

inline constexpr std::size_t kMaxIsomorphismVertices = 64;

namespace detail {

struct VertexSignature {
  std::size_t degree = 0;
  std::vector<std::uint32_t> distance_profile;  // sorted finite distances
  std::size_t unreachable = 0;

  friend auto operator<=>(const VertexSignature&, const VertexSignature&) = default;
};

inline std::vector<VertexSignature> signatures(const Graph& g, const DistanceMatrix& d) {
  std::vector<VertexSignature> out(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    out[u].degree = g.degree(u);
    for (const Distance& x : d.row(u)) {
      if (x) {
        out[u].distance_profile.push_back(*x);
      } else {
        ++out[u].unreachable;
      }
    }
    std::sort(out[u].distance_profile.begin(), out[u].distance_profile.end());
  }
  return out;
}

}  // namespace detail

/// Exact isomorphism test by backtracking over signature-compatible
/// candidates, with distance consistency against every mapped vertex.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.vertex_count();
  if (n > kMaxIsomorphismVertices || b.vertex_count() > kMaxIsomorphismVertices) {
    throw SizeCapError("isomorphism test limited to " + std::to_string(kMaxIsomorphismVertices) +
                       " vertices");
  }
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n == 0) return true;

  const DistanceMatrix da = all_pairs_distances(a);
  const DistanceMatrix db = all_pairs_distances(b);
  const auto sa = detail::signatures(a, da);
  const auto sb = detail::signatures(b, db);
  {
    auto x = sa;
    auto y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }

  // Visit a's vertices in BFS order so each new vertex touches mapped ones.
  std::vector<Vertex> order;
  {
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t head = order.size();
      order.push_back(s);
      for (; head < order.size(); ++head) {
        for (Vertex v : a.neighbors(order[head])) {
          if (!seen[v]) {
            seen[v] = 1;
            order.push_back(v);
          }
        }
      }
    }
  }

  std::vector<Vertex> image(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == n) return true;
    const Vertex x = order[pos];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        ok = da.at(x, order[q]) == db.at(y, image[order[q]]);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (extend(pos + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace cayleymd
