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

#include "cayleymd/predict.hpp"

#include <gtest/gtest.h>

#include "cayleymd/families.hpp"
#include "oracles.hpp"

namespace cayleymd {
namespace {

using Kind = Prediction::Kind;

ConnectionSet cyclic_set(const AbelianGroup& z, std::string_view s) { return parse_connection_set(z, s); }

TEST(FamiliesTest, Constructors) {
  const Graph p = prism(2, 3);
  EXPECT_EQ(p.vertex_count(), 6u);
  EXPECT_EQ(p.edge_count(), 9u);
  EXPECT_EQ(p.label(4), "(1,1)");
  EXPECT_TRUE(is_regular(p, 3));
  EXPECT_TRUE(is_isomorphic(prism(1, 5), cycle_graph(5)));

  EXPECT_TRUE(is_isomorphic(mobius_ladder(6, MobiusConvention::vertices), complete_bipartite(3, 3)));
  EXPECT_EQ(mobius_ladder(5, MobiusConvention::rungs).vertex_count(), 10u);
  EXPECT_THROW(mobius_ladder(7, MobiusConvention::vertices), Error);
  EXPECT_THROW(mobius_ladder(4, MobiusConvention::vertices), Error);
  EXPECT_EQ(parse_mobius_convention("rungs"), MobiusConvention::rungs);
  EXPECT_THROW(parse_mobius_convention("edges"), ParseError);

  EXPECT_EQ(hypercube(1).edge_count(), 1u);
  EXPECT_TRUE(is_isomorphic(hypercube(2), cycle_graph(4)));
  EXPECT_EQ(hypercube(3).label(5), "101");
  EXPECT_EQ(hypercube(4).edge_count(), 32u);
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6u);
  EXPECT_TRUE(is_path_graph(path_graph(4)));
  EXPECT_TRUE(is_cycle_graph(cycle_graph(4)));
}

TEST(PredictTest, FamilyClaims) {
  EXPECT_EQ(predict_prism(2, 5).value_string(), "2");
  EXPECT_EQ(predict_prism(3, 6).value_string(), "3");
  EXPECT_EQ(predict_prism(1, 6).kind, Kind::no_claim);
  EXPECT_EQ(predict_mobius(10).value_string(), "3");
  EXPECT_EQ(predict_mobius(12).value_string(), "[3,4]");
  EXPECT_EQ(predict_mobius(6).kind, Kind::no_claim);
  EXPECT_EQ(predict_circulant_antipodal(12).value_string(), "3");
  EXPECT_EQ(predict_circulant_antipodal(14).value_string(), "4");
  EXPECT_EQ(predict_cubic_bipartite(hypercube(3)).value_string(), "[3,7]");
  EXPECT_EQ(predict_cubic_bipartite(prism(2, 5)).kind, Kind::no_claim);
  EXPECT_EQ(predict_prism(2, 5).describe(), "2 (prism)");
}

TEST(PredictTest, ConsistencyWithCap) {
  const auto three = Prediction::exact(3, Claim::prism, Variant::as_stated);
  EXPECT_TRUE(three.consistent_with(3, 5));
  EXPECT_FALSE(three.consistent_with(2, 5));
  EXPECT_FALSE(three.consistent_with(std::nullopt, 5));
  EXPECT_TRUE(three.consistent_with(std::nullopt, 2));
  const auto not2 = Prediction::not_two(Claim::characterization, Variant::as_stated);
  EXPECT_TRUE(not2.consistent_with(std::nullopt, 5));
  EXPECT_FALSE(not2.consistent_with(2, 5));
  EXPECT_THROW(Prediction::interval(4, 3, Claim::none, Variant::as_stated), Error);
}

TEST(PredictTest, CyclicInvolutionVariants) {
  // Z10, i = 2: gcd(i, n) = 2, n = 2 mod 4.
  auto p = predict_cyclic_involution(10, 2);
  EXPECT_EQ(p.as_stated.value_string(), "2");
  EXPECT_EQ(p.proof_consistent.value_string(), "2");
  // Z6, i = 1: the literal condition says 2, the generator case says 4.
  p = predict_cyclic_involution(6, 1);
  EXPECT_EQ(p.as_stated.value_string(), "2");
  EXPECT_EQ(p.as_stated.notes, std::vector<std::string>{std::string(kStatedConflictNote)});
  EXPECT_EQ(p.proof_consistent.value_string(), "4");
  // Z12, i = 1.
  p = predict_cyclic_involution(12, 1);
  EXPECT_EQ(p.as_stated.value_string(), "3");
  EXPECT_EQ(p.proof_consistent.value_string(), "3");
  // Z12, i = 2 does not generate together with 6.
  EXPECT_EQ(predict_cyclic_involution(12, 2).proof_consistent.kind, Kind::no_claim);
  EXPECT_EQ(predict_cyclic_involution(7, 1).as_stated.kind, Kind::no_claim);
  // Negative steps reduce mod n.
  EXPECT_EQ(predict_cyclic_involution(10, -2).proof_consistent.value_string(), "2");
}

TEST(PredictTest, Characterization) {
  AbelianGroup z7({7});
  auto p = predict_characterization(z7, cyclic_set(z7, "1,6"));
  EXPECT_EQ(p.as_stated.value_string(), "not 2");
  EXPECT_EQ(p.proof_consistent.describe(), "2 (cycle)");
  EXPECT_EQ(p.proof_consistent.notes, std::vector<std::string>{std::string(kCycleCaseNote)});

  AbelianGroup z6({6});
  p = predict_characterization(z6, cyclic_set(z6, "1,3,5"));
  EXPECT_EQ(p.as_stated.describe(), "2 (characterization)");
  EXPECT_EQ(p.proof_consistent.describe(), "4 (circulant-antipodal)");

  AbelianGroup z10({10});
  p = predict_characterization(z10, cyclic_set(z10, "2,5,8"));
  EXPECT_TRUE(p.as_stated.claims_two());
  EXPECT_EQ(p.proof_consistent.describe(), "2 (cyclic-step)");

  p = predict_characterization(z10, cyclic_set(z10, "1,2,8,9"));
  EXPECT_EQ(p.proof_consistent.describe(), "not 2 (degree-bound)");

  AbelianGroup z2z4({2, 4});
  p = predict_characterization(z2z4, parse_connection_set(z2z4, "(1,0);(0,1);(0,3)"));
  EXPECT_EQ(p.as_stated.describe(), "not 2 (noncyclic-abelian)");

  AbelianGroup z4({4});
  EXPECT_EQ(predict_characterization(z4, cyclic_set(z4, "1,3")).as_stated.kind, Kind::no_claim);
  EXPECT_EQ(predict_characterization(z10, cyclic_set(z10, "2,8")).as_stated.kind, Kind::no_claim);
}

AvoidanceReport avoidance(std::string_view group, std::string_view set) {
  const AbelianGroup g = parse_group(group);
  const ConnectionSet s = parse_connection_set(g, set);
  const Graph graph = build_cayley(g, s);
  return check_resolving_set_avoids_s(g, s, graph, all_pairs_distances(graph));
}

TEST(AvoidanceTest, HoldsOnLargerPrisms) {
  for (auto [grp, set] : {std::pair{"Z10", "2,5,8"}, std::pair{"Z14", "2,7,12"}, std::pair{"Z18", "4,9,14"}}) {
    const auto r = avoidance(grp, set);
    EXPECT_TRUE(r.applicable) << grp;
    EXPECT_GT(r.pairs_checked, 0u) << grp;
    EXPECT_TRUE(r.holds()) << grp;
  }
}

TEST(AvoidanceTest, SkipsCyclesAndHigherDimension) {
  auto r = avoidance("Z6", "1,5");
  EXPECT_FALSE(r.applicable);
  EXPECT_EQ(r.skipped_reason, "graph is a cycle");
  r = avoidance("Z12", "1,6,11");
  EXPECT_FALSE(r.applicable);
}

// The triangular prism has resolving pairs joined by an edge of S.
TEST(AvoidanceTest, TriangularPrismHasAdjacentResolvingPair) {
  const AbelianGroup z6({6});
  const ConnectionSet s = parse_connection_set(z6, "2,3,4");
  const Graph g = build_cayley(z6, s);
  const auto r = check_resolving_set_avoids_s(z6, s, g, all_pairs_distances(g));
  ASSERT_TRUE(r.applicable);
  EXPECT_FALSE(r.holds());
  const auto pairs = oracle::naive_resolving_pairs(g);
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), std::pair<std::size_t, std::size_t>{0, 2}), pairs.end());
  EXPECT_TRUE(g.has_edge(0, 2));
  for (auto [a, b] : r.violations) EXPECT_TRUE(g.has_edge(a, b));
}

}  // namespace
}  // namespace cayleymd
