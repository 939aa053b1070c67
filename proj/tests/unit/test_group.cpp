// Copyright 2026 The skewbrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "skb/group.hpp"
#include "skb/group_catalog.hpp"

namespace skb {
namespace {

std::vector<oracle::Set> library_subgroups(const GroupTable& g) {
  std::vector<oracle::Set> out;
  for (const auto& s : all_subgroups(g)) out.emplace_back(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Set> sorted(std::vector<oracle::Set> v) {
  std::sort(v.begin(), v.end());
  return v;
}

GroupTable s3() { return dihedral_group(6); }

Elem some_involution(const GroupTable& g) {
  for (Elem x = 1; x < g.order(); ++x) {
    if (g.element_order(x) == 2) return x;
  }
  return 0;
}

TEST(ValidateGroup, Singleton) {
  const auto g = validate_group({{0}});
  EXPECT_EQ(g.order(), 1U);
  EXPECT_TRUE(g.is_abelian());
}

TEST(ValidateGroup, CyclicOfOrderTwo) {
  const auto g = validate_group({{0, 1}, {1, 0}});
  EXPECT_EQ(g.inv(0), 0U);
  EXPECT_EQ(g.inv(1), 1U);
}

TEST(ValidateGroup, ReportsKindsAndWitnesses) {
  try {
    validate_group({{0, 1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLatinSquare);
  }
  try {
    validate_group({{1, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoIdentityAtZero);
  }
  // A Latin square with identity 0 that is not associative.
  const Matrix loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    validate_group(loop);
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.kind(), ErrorKind::NonAssociative);
    ASSERT_EQ(e.witness().size(), 3U);
    const Elem a = e.witness()[0], b = e.witness()[1], c = e.witness()[2];
    EXPECT_NE(loop[loop[a][b]][c], loop[a][loop[b][c]]);
  }
  EXPECT_THROW(validate_group({{0, 1}, {1}}), Error);
  EXPECT_THROW(validate_group({}), Error);
}

TEST(ValidateGroup, CatalogTablesRevalidate) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& ng : group_catalog(n)) {
      EXPECT_EQ(validate_group(ng.table.to_matrix()), ng.table) << ng.name;
    }
  }
}

TEST(SubgroupGenerated, Examples) {
  const auto c4 = cyclic_group(4);
  EXPECT_EQ(subgroup_generated(c4, Subset(4, {2})), Subset(4, {0, 2}));
  EXPECT_EQ(subgroup_generated(c4, Subset(4, {})), Subset::zero(4));
  const auto g = s3();
  const Elem t = some_involution(g);
  EXPECT_EQ(subgroup_generated(g, Subset(6, {t})), Subset(6, {0, t}));
}

TEST(AllSubgroups, MatchesBruteForce) {
  EXPECT_EQ(all_subgroups(cyclic_group(2)).size(), 2U);
  EXPECT_EQ(all_subgroups(direct_product(cyclic_group(2), cyclic_group(2))).size(), 5U);
  EXPECT_EQ(all_subgroups(s3()).size(), 6U);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& ng : group_catalog(n)) {
      EXPECT_EQ(library_subgroups(ng.table), sorted(oracle::subgroups(ng.table))) << ng.name;
    }
  }
}

TEST(IsNormal, Examples) {
  const auto g = s3();
  Subset rotations;
  for (const auto& s : all_subgroups(g)) {
    if (s.size() == 3) rotations = s;
  }
  EXPECT_TRUE(is_normal(g, rotations));
  EXPECT_FALSE(is_normal(g, Subset(6, {0, some_involution(g)})));
  const auto c6 = cyclic_group(6);
  for (const auto& s : all_subgroups(c6)) EXPECT_TRUE(is_normal(c6, s));
  EXPECT_THROW(is_normal(g, Subset(6, {0, 1})), Error);
}

TEST(IsNormal, MatchesBruteForce) {
  for (std::size_t n : {6U, 8U, 12U}) {
    for (const auto& ng : group_catalog(n)) {
      for (const auto& s : all_subgroups(ng.table)) {
        EXPECT_EQ(is_normal(ng.table, s), oracle::normal(ng.table, {s.begin(), s.end()}))
            << ng.name << " " << to_string(s);
      }
    }
  }
}

TEST(Center, Examples) {
  const auto c6 = cyclic_group(6);
  EXPECT_TRUE(center(c6).is_full());
  EXPECT_EQ(center(s3()), Subset::zero(6));
  EXPECT_EQ(center(dihedral_group(8)).size(), 2U);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& ng : group_catalog(n)) {
      const auto c = center(ng.table);
      EXPECT_EQ(oracle::Set(c.begin(), c.end()), oracle::center(ng.table)) << ng.name;
    }
  }
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(cyclic_group(2)).size(), 1U);
  EXPECT_TRUE(automorphisms(cyclic_group(2)).front().is_identity());
  EXPECT_EQ(automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size(), 6U);
  EXPECT_EQ(automorphisms(cyclic_group(4)).size(), 2U);
}

TEST(Automorphisms, MatchBruteForceUpToOrderEight) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& ng : group_catalog(n)) {
      std::vector<std::vector<Elem>> lib;
      for (const auto& p : automorphisms(ng.table)) lib.emplace_back(p.images().begin(), p.images().end());
      auto brute = oracle::automorphisms(ng.table);
      std::sort(lib.begin(), lib.end());
      std::sort(brute.begin(), brute.end());
      EXPECT_EQ(lib, brute) << ng.name;
    }
  }
}

TEST(Holomorph, Orders) {
  EXPECT_EQ(holomorph(cyclic_group(2)).group.order(), 2U);
  EXPECT_EQ(holomorph(cyclic_group(3)).group.order(), 6U);
  const auto hol = holomorph(direct_product(cyclic_group(2), cyclic_group(2)));
  EXPECT_EQ(hol.group.order(), 24U);
  EXPECT_EQ(hol.automorphisms.size(), 6U);
  EXPECT_TRUE(are_isomorphic(hol.group, symmetric_group(4).table).has_value());
}

TEST(Holomorph, ActionIsFaithfulOnPairs) {
  const auto g = cyclic_group(5);
  const auto hol = holomorph(g);
  ASSERT_EQ(hol.action.size(), hol.group.order());
  for (Elem x = 0; x < hol.group.order(); ++x) {
    for (Elem y = 0; y < hol.group.order(); ++y) {
      EXPECT_EQ(hol.action[hol.group.op(x, y)], hol.action[x] * hol.action[y]);
    }
  }
}

TEST(AreIsomorphic, Examples) {
  const auto c4 = cyclic_group(4);
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_FALSE(are_isomorphic(c4, v4).has_value());
  const auto self = are_isomorphic(c4, c4);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(oracle::preserves(c4, {self->images().begin(), self->images().end()}));
  // S3 as a dihedral table and as permutations of three points, then relabelled.
  const auto perm_s3 = symmetric_group(3).table;
  const auto shuffled = validate_group(oracle::relabel(perm_s3.to_matrix(), {0, 4, 2, 5, 1, 3}));
  const auto iso = are_isomorphic(s3(), shuffled);
  ASSERT_TRUE(iso.has_value());
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) EXPECT_EQ((*iso)(s3().op(a, b)), shuffled.op((*iso)(a), (*iso)(b)));
  }
}

TEST(GroupCatalog, CountsAndNames) {
  const std::size_t expected[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto groups = group_catalog(n);
    EXPECT_EQ(groups.size(), expected[n - 1]) << n;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      EXPECT_EQ(identify_group(groups[i].table), groups[i].name);
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        EXPECT_FALSE(are_isomorphic(groups[i].table, groups[j].table).has_value());
        if (n <= 8) EXPECT_FALSE(oracle::isomorphic(groups[i].table, groups[j].table));
      }
    }
  }
  EXPECT_THROW(group_catalog(13), Error);
  EXPECT_THROW(group_catalog(0), Error);
}

TEST(GroupCatalog, IdentifiesRelabelledTables) {
  const auto q8 = dicyclic_group(8);
  const auto shuffled = validate_group(oracle::relabel(q8.to_matrix(), {0, 7, 6, 5, 4, 3, 2, 1}));
  EXPECT_EQ(identify_group(shuffled), "Q8");
  EXPECT_EQ(identify_group(symmetric_group(4).table), "order-24 group");
  EXPECT_EQ(identify_group(alternating_group(4).table), "A4");
}

TEST(Orbits, Examples) {
  EXPECT_EQ(orbits({}, 3).size(), 3U);
  const std::vector<Permutation> swap{Permutation::from_cycles(3, {{0, 1}})};
  const auto o = orbits(swap, 3);
  ASSERT_EQ(o.size(), 2U);
  EXPECT_EQ(o[0], Subset(3, {0, 1}));
  EXPECT_EQ(o[1], Subset(3, {2}));
  const std::vector<Permutation> sigma{
      Permutation::from_cycles(4, {{2, 3}}), Permutation::from_cycles(4, {{0, 2, 1, 3}}),
      Permutation::from_cycles(4, {{0, 3, 1, 2}}), Permutation::from_cycles(4, {{0, 1}})};
  EXPECT_EQ(orbits(sigma, 4).size(), 1U);
}

TEST(Constructions, SemidirectAndPermutationGroups) {
  const auto c3 = cyclic_group(3);
  const auto inversion = automorphisms(c3).back();
  const auto d6 = semidirect_product(c3, cyclic_group(2), {Permutation::identity(3), inversion});
  EXPECT_TRUE(are_isomorphic(d6, s3()).has_value());
  EXPECT_EQ(symmetric_group(4).table.order(), 24U);
  EXPECT_EQ(alternating_group(5).table.order(), 60U);
  EXPECT_THROW(symmetric_group(8), Error);
  const auto pg = symmetric_group(3);
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      EXPECT_EQ(pg.elements[pg.table.op(a, b)], pg.elements[a] * pg.elements[b]);
    }
  }
}

TEST(Relabel, KeepsStructure) {
  const auto g = dihedral_group(8);
  const auto p = Permutation::from_cycles(8, {{1, 5, 3}, {2, 7}});
  const auto h = relabel(g, p);
  EXPECT_TRUE(oracle::isomorphic(g, h));
  EXPECT_THROW(relabel(g, Permutation::from_cycles(8, {{0, 1}})), Error);
}

TEST(GeneratingSet, Generates) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& ng : group_catalog(n)) {
      const auto gens = generating_set(ng.table);
      EXPECT_TRUE(subgroup_generated(ng.table, gens).is_full()) << ng.name;
    }
  }
}

}  // namespace
}  // namespace skb
