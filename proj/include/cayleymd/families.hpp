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

// Parametric graph families: prisms, Mobius ladders, hypercubes and the
// small reference graphs used throughout the tests.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cayleymd/cayley.hpp"
#include "cayleymd/errors.hpp"
#include "cayleymd/graph.hpp"
#include "cayleymd/group.hpp"

namespace cayleymd {

/// P_m x C_n. Vertex (i, j) has index i*n + j; i walks the path, j the cycle.
inline Graph prism(std::size_t m, std::size_t n) {
  if (m < 1 || n < 3) throw Error("prism needs m >= 1 and n >= 3");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * n + j); };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      edges.emplace_back(id(i, j), id(i, (j + 1) % n));
      if (i + 1 < m) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  }
  return Graph(m * n, edges, std::move(labels));
}

/// How the Mobius ladder parameter is read.
enum class MobiusConvention {
  vertices,  // parameter is the vertex count N
  rungs,     // parameter is the rung count, N = 2 * parameter
};

inline std::string_view to_string(MobiusConvention c) {
  return c == MobiusConvention::vertices ? "vertices" : "rungs";
}

inline MobiusConvention parse_mobius_convention(std::string_view s) {
  if (s == "vertices") return MobiusConvention::vertices;
  if (s == "rungs") return MobiusConvention::rungs;
  throw ParseError("unknown Mobius convention '" + std::string(s) + "' (vertices|rungs)");
}

inline std::size_t mobius_vertex_count(std::size_t param, MobiusConvention c) {
  return c == MobiusConvention::vertices ? param : 2 * param;
}

/// Cay(Z_N, {1, -1, N/2}).
inline Graph circulant_antipodal(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw Error("antipodal circulant needs an even order >= 4");
  AbelianGroup z({static_cast<std::uint32_t>(n)});
  const auto half = static_cast<std::int64_t>(n / 2);
  return build_cayley(z, ConnectionSet(z, {z.element({1}), z.element({-1}), z.element({half})}));
}

inline Graph mobius_ladder(std::size_t param, MobiusConvention c) {
  const std::size_t n = mobius_vertex_count(param, c);
  if (n < 6 || n % 2 != 0) {
    throw Error("Mobius ladder needs an even vertex count >= 6, got " + std::to_string(n));
  }
  return circulant_antipodal(n);
}

/// Q_d: vertices are bit strings, adjacent when they differ in one bit.
inline Graph hypercube(std::size_t d) {
  if (d < 1 || d > 16) throw Error("hypercube dimension must be in 1..16");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < n; ++u) {
    std::string bits;
    for (std::size_t b = d; b-- > 0;) bits += ((u >> b) & 1) ? '1' : '0';
    labels.push_back(std::move(bits));
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges, std::move(labels));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw Error("path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(n, edges);
}

/// K_{a,b}; the first part is 0..a-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  }
  return Graph(a + b, edges);
}

}  // namespace cayleymd
