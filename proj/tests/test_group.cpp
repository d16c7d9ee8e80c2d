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

#include "cayleymd/group.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

namespace cayleymd {
namespace {

TEST(GroupTest, AddIsComponentwiseModular) {
  AbelianGroup z6({6});
  EXPECT_EQ(z6.add(z6.element({4}), z6.element({5})), z6.element({3}));

  AbelianGroup z2z4({2, 4});
  EXPECT_EQ(z2z4.add(z2z4.element({1, 3}), z2z4.element({1, 1})), z2z4.identity());

  for (const auto& g : z2z4.elements()) EXPECT_EQ(z2z4.add(g, z2z4.identity()), g);
}

TEST(GroupTest, AddRejectsMismatchedShapes) {
  AbelianGroup z6({6});
  AbelianGroup z2z3({2, 3});
  EXPECT_THROW(z6.add(z6.element({1}), z2z3.element({1, 1})), GroupShapeError);
  EXPECT_THROW(z6.element({1, 2}), GroupShapeError);
  EXPECT_THROW(z6.add(GroupElement{{7}}, z6.element({1})), GroupShapeError);
}

TEST(GroupTest, ElementsAreCanonicalized) {
  AbelianGroup z2z4({2, 4});
  EXPECT_EQ(z2z4.element({3, -1}), z2z4.element({1, 3}));
  EXPECT_EQ(z2z4.element({-4, 9}).residues, (std::vector<std::uint32_t>{0, 1}));
}

TEST(GroupTest, Inverse) {
  AbelianGroup z6({6});
  EXPECT_EQ(z6.inverse(z6.element({2})), z6.element({4}));
  EXPECT_EQ(z6.inverse(z6.identity()), z6.identity());

  AbelianGroup klein({2, 2});
  for (const auto& g : klein.elements()) EXPECT_EQ(klein.inverse(g), g);
}

TEST(GroupTest, ElementOrder) {
  AbelianGroup z10({10});
  EXPECT_EQ(z10.element_order(z10.element({2})), 5u);
  EXPECT_EQ(z10.element_order(z10.element({5})), 2u);
  EXPECT_EQ(z10.element_order(z10.identity()), 1u);

  AbelianGroup z2z4({2, 4});
  EXPECT_EQ(z2z4.element_order(z2z4.element({1, 1})), 4u);
}

TEST(GroupTest, SubgroupGenerated) {
  AbelianGroup z6({6});
  std::vector<GroupElement> two{z6.element({2})};
  EXPECT_EQ(z6.subgroup_generated(two),
            (std::vector<GroupElement>{z6.element({0}), z6.element({2}), z6.element({4})}));

  AbelianGroup z10({10});
  std::vector<GroupElement> gens{z10.element({2}), z10.element({5})};
  EXPECT_EQ(z10.subgroup_generated(gens).size(), 10u);
  EXPECT_TRUE(z10.is_generating(gens));

  std::vector<GroupElement> id{z10.identity()};
  EXPECT_EQ(z10.subgroup_generated(id), std::vector<GroupElement>{z10.identity()});
}

TEST(GroupTest, Predicates) {
  AbelianGroup z6({6});
  std::vector<GroupElement> s{z6.element({1}), z6.element({5}), z6.element({3})};
  EXPECT_TRUE(z6.is_inverse_closed(s));
  std::vector<GroupElement> t{z6.element({1}), z6.element({3})};
  EXPECT_FALSE(z6.is_inverse_closed(t));

  EXPECT_FALSE(AbelianGroup({2, 2}).is_cyclic());
  EXPECT_TRUE(AbelianGroup({2, 3}).is_cyclic());
  EXPECT_FALSE(AbelianGroup({2, 4}).is_cyclic());
  EXPECT_TRUE(AbelianGroup({4, 9, 5}).is_cyclic());
}

TEST(GroupTest, InvariantFactors) {
  EXPECT_EQ(invariant_factors(std::vector<std::uint32_t>{2, 3}), (std::vector<std::uint32_t>{6}));
  EXPECT_EQ(invariant_factors(std::vector<std::uint32_t>{2, 4, 3}), (std::vector<std::uint32_t>{2, 12}));
  EXPECT_EQ(invariant_factors(std::vector<std::uint32_t>{6, 10}), (std::vector<std::uint32_t>{2, 30}));
  EXPECT_EQ(invariant_factors(std::vector<std::uint32_t>{2, 2, 2}), (std::vector<std::uint32_t>{2, 2, 2}));
}

TEST(GroupTest, AbelianGroupsOfOrder) {
  auto literals = [](std::size_t n) {
    std::vector<std::string> out;
    for (const auto& g : abelian_groups_of_order(n)) out.push_back(g.literal());
    return out;
  };
  EXPECT_EQ(literals(8), (std::vector<std::string>{"Z8", "Z2xZ4", "Z2xZ2xZ2"}));
  EXPECT_EQ(literals(6), (std::vector<std::string>{"Z6"}));
  EXPECT_EQ(literals(16).size(), 5u);
  EXPECT_EQ(literals(24), (std::vector<std::string>{"Z24", "Z2xZ12", "Z2xZ2xZ6"}));
  EXPECT_EQ(literals(7), (std::vector<std::string>{"Z7"}));
}

TEST(GroupTest, CyclicCoordinate) {
  AbelianGroup z2z3({2, 3});
  std::set<std::uint64_t> seen;
  for (const auto& g : z2z3.elements()) {
    const auto x = z2z3.cyclic_coordinate(g);
    EXPECT_EQ(x % 2, g.residues[0]);
    EXPECT_EQ(x % 3, g.residues[1]);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_THROW(AbelianGroup({2, 2}).cyclic_coordinate(GroupElement{{1, 0}}), GroupShapeError);
}

TEST(GroupTest, ParseLiterals) {
  EXPECT_EQ(parse_group("Z6").factors(), (std::vector<std::uint32_t>{6}));
  EXPECT_EQ(parse_group("z2XZ4").factors(), (std::vector<std::uint32_t>{2, 4}));
  EXPECT_EQ(parse_group(" Z2xZ2xZ2 ").literal(), "Z2xZ2xZ2");
  EXPECT_THROW(parse_group("Z1"), ParseError);
  EXPECT_THROW(parse_group("Q8"), ParseError);
  EXPECT_THROW(parse_group(""), ParseError);
  EXPECT_THROW(parse_group("Z2x"), ParseError);

  AbelianGroup z2z4({2, 4});
  EXPECT_EQ(z2z4.parse_element("(1,3)"), z2z4.element({1, 3}));
  EXPECT_EQ(z2z4.format(z2z4.element({1, 3})), "(1,3)");
  EXPECT_THROW(z2z4.parse_element("(1,3"), ParseError);
}

TEST(GroupTest, OrderCap) {
  EXPECT_THROW(AbelianGroup({16, 17}), GroupTooLargeError);
  EXPECT_NO_THROW(AbelianGroup({16, 17}, 300));
  EXPECT_THROW(parse_group("Z512"), ParseError);
}

// Properties, checked exhaustively over every group of order <= 24.
TEST(GroupProperties, LagrangeClosureAndEnumeration) {
  for (std::size_t n = 2; n <= 24; ++n) {
    for (const auto& group : abelian_groups_of_order(n)) {
      const auto elems = group.elements();
      std::set<GroupElement> distinct(elems.begin(), elems.end());
      ASSERT_EQ(distinct.size(), n) << group.literal();
      for (const auto& g : elems) {
        EXPECT_EQ(n % group.element_order(g), 0u) << group.literal();
        EXPECT_EQ(group.multiple(g, static_cast<std::int64_t>(group.element_order(g))), group.identity());
        std::vector<GroupElement> single{g};
        const auto h = group.subgroup_generated(single);
        EXPECT_EQ(h.size(), group.element_order(g));
        std::set<GroupElement> hs(h.begin(), h.end());
        for (const auto& a : h)
          for (const auto& b : h) EXPECT_TRUE(hs.count(group.add(a, b)));
      }
    }
  }
}

TEST(GroupProperties, GeneratingInvariantUnderInverseClosure) {
  AbelianGroup z2z6({2, 6});
  const auto elems = z2z6.elements();
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      std::vector<GroupElement> s{a, z2z6.inverse(a), b, z2z6.inverse(b)};
      std::vector<GroupElement> closed = s;
      for (const auto& x : s) closed.push_back(z2z6.inverse(x));
      EXPECT_EQ(z2z6.is_generating(s), z2z6.is_generating(closed));
    }
  }
}

}  // namespace
}  // namespace cayleymd
