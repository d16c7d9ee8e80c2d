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

#include "cayleymd/graph_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cayleymd/cayley.hpp"
#include "cayleymd/families.hpp"

namespace cayleymd {
namespace {

TEST(GraphIoTest, DotRoundTripKeepsIndicesAndLabels) {
  AbelianGroup z2z4({2, 4});
  const Graph g = build_cayley(z2z4, parse_connection_set(z2z4, "(1,0);(0,1);(0,3)"));
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("0 [label=\"(0,0)\"];"), std::string::npos);
  EXPECT_NE(dot.find("  0 -- 1;\n"), std::string::npos);
  const Graph back = parse_dot(dot);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.labels(), g.labels());
}

TEST(GraphIoTest, DotEdgeLinesAreOnePerEdge) {
  const std::string dot = to_dot(prism(2, 5));
  std::size_t lines = 0;
  for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 2)) ++lines;
  EXPECT_EQ(lines, 15u);
}

TEST(GraphIoTest, ParsesHandWrittenDot) {
  const Graph g = parse_dot(R"(
    // a comment
    strict graph "tri" {
      node [shape=circle];
      a -- b -- c [color=red];
      c -- a;
      /* block */ d;
    }
  )");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(3), 0u);
}

TEST(GraphIoTest, RejectsDirectedAndMalformedDot) {
  EXPECT_THROW(parse_dot("digraph { a -> b; }"), ParseError);
  EXPECT_THROW(parse_dot("graph { a -> b; }"), ParseError);
  EXPECT_THROW(parse_dot("graph { a -- b;"), ParseError);
  EXPECT_THROW(parse_dot("tree { }"), ParseError);
  EXPECT_THROW(parse_dot("graph { a -- a; }"), VertexRangeError);
}

TEST(GraphIoTest, AdjacencyList) {
  const Graph c = cycle_graph(5);
  const Graph back = parse_adjacency_list(to_adjacency_list(c));
  EXPECT_EQ(back.edges(), c.edges());
  const Graph g = parse_adjacency_list("# comment\n3\n0 1\n\n1 2  # trailing\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(parse_adjacency_list(""), ParseError);
  EXPECT_THROW(parse_adjacency_list("3\n0 x\n"), ParseError);
  EXPECT_THROW(parse_adjacency_list("3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_adjacency_list("3\n0 5\n"), VertexRangeError);
}

TEST(GraphIoTest, LoadGraphDispatchesOnExtension) {
  const auto dir = std::filesystem::temp_directory_path() / "cayleymd_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "g.dot") << to_dot(hypercube(3));
    std::ofstream(dir / "g.txt") << to_adjacency_list(hypercube(3));
  }
  EXPECT_TRUE(is_isomorphic(load_graph(dir / "g.dot"), hypercube(3)));
  EXPECT_TRUE(is_isomorphic(load_graph(dir / "g.txt"), hypercube(3)));
  EXPECT_THROW(load_graph(dir / "missing.dot"), IoError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace cayleymd
