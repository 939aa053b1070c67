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

#include <cstdlib>
#include <functional>
#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skb/enumeration.hpp"

namespace skb {
namespace {

using fixtures::catalog;

// Counts maps a -> phi_a in Aut(A) with phi_{a + phi_a(b)} = phi_a phi_b by
// trying every assignment. Each such map is one regular subgroup of Hol(A).
std::size_t brute_regular_subgroups(const GroupTable& g) {
  const auto auts = oracle::automorphisms(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> choice(n, 0);
  auto compose = [&](std::size_t i, std::size_t j) {
    std::vector<Elem> c(n);
    for (Elem x = 0; x < n; ++x) c[x] = auts[i][auts[j][x]];
    return c;
  };
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == n) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          const Elem z = g.op(x, auts[choice[x]][y]);
          if (auts[choice[z]] != compose(choice[x], choice[y])) return;
        }
      }
      ++count;
      return;
    }
    for (std::size_t k = 0; k < auts.size(); ++k) {
      choice[a] = k;
      rec(a + 1);
    }
  };
  rec(0);
  return count;
}

TEST(SkewBracesOn, SmallCyclicGroups) {
  const auto c2 = skew_braces_on(cyclic_group(2));
  ASSERT_EQ(c2.size(), 1U);
  EXPECT_TRUE(is_trivial(c2[0]));
  EXPECT_EQ(skew_braces_on(cyclic_group(3)).size(), 1U);
}

TEST(SkewBracesOn, ElementaryAbelianOfOrderEight) {
  const auto c2 = cyclic_group(2);
  const auto braces = skew_braces_on(direct_product(direct_product(c2, c2), c2));
  bool witness = false;
  for (const auto& b : braces) {
    witness = witness || (identify_group(b.multiplicative()) == "D8" && !right_nilpotency_class(b));
  }
  EXPECT_TRUE(witness);
}

TEST(BracesOfOrder, Counts) {
  const std::size_t total[] = {1, 1, 1, 4, 1, 6, 1, 47};
  const std::size_t left[] = {1, 1, 1, 4, 1, 2, 1, 27};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto& cat = catalog(n);
    EXPECT_EQ(cat.order, n);
    EXPECT_EQ(cat.provenance, Provenance::Holomorph);
    EXPECT_EQ(cat.entries.size(), total[n - 1]) << n;
    std::size_t l = 0;
    for (const auto& e : cat.entries) l += e.brace.is_left_brace();
    EXPECT_EQ(l, left[n - 1]) << n;
  }
}

TEST(BracesOfOrder, LargerOrdersWhenAllowed) {
  EnumerationOptions opts;
  opts.allow_large = true;
  const std::size_t total[] = {4, 6, 1, 38};
  const std::size_t left[] = {4, 2, 1, 10};
  for (std::size_t n = 9; n <= 12; ++n) {
    const auto cat = braces_of_order(n, opts);
    EXPECT_EQ(cat.entries.size(), total[n - 9]) << n;
    std::size_t l = 0;
    for (const auto& e : cat.entries) l += e.brace.is_left_brace();
    EXPECT_EQ(l, left[n - 9]) << n;
  }
}

TEST(BracesOfOrder, EntriesArePairwiseNonIsomorphic) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto& es = catalog(n).entries;
    for (std::size_t i = 0; i < es.size(); ++i) {
      EXPECT_EQ(es[i].add_name, identify_group(es[i].brace.additive()));
      EXPECT_EQ(es[i].mult_name, identify_group(es[i].brace.multiplicative()));
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (es[i].add_name != es[j].add_name || es[i].mult_name != es[j].mult_name) continue;
        EXPECT_FALSE(are_isomorphic_braces(es[i].brace, es[j].brace).has_value());
        EXPECT_FALSE(oracle::isomorphic_braces(es[i].brace, es[j].brace)) << n << " " << i << " " << j;
      }
    }
  }
}

TEST(BracesOfOrder, OrderEightWitnesses) {
  bool unnilpotent = false, factorized = false;
  for (const auto& b : fixtures::c2cubed_d8()) {
    const auto cls = right_nilpotency_class(b);
    unnilpotent = unnilpotent || !cls;
    factorized = factorized || (cls && fixtures::has_trivial_trivial(b));
  }
  EXPECT_TRUE(unnilpotent);
  EXPECT_TRUE(factorized);
}

TEST(RegularSubgroups, MatchBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : group_catalog(n)) {
      EXPECT_EQ(count_regular_subgroups(g.table), brute_regular_subgroups(g.table)) << g.name;
    }
  }
}

TEST(RegularSubgroups, OrbitStabilizer) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& g : group_catalog(n)) {
      const std::size_t aut = automorphisms(g.table).size();
      std::size_t sum = 0;
      for (const auto& e : catalog(n).entries) {
        if (e.add_name != g.name) continue;
        const std::size_t stab = brace_automorphisms(e.brace).size();
        ASSERT_EQ(aut % stab, 0U);
        sum += aut / stab;
      }
      EXPECT_EQ(count_regular_subgroups(g.table), sum) << g.name;
    }
  }
}

TEST(BruteForceOracle, AgreesWithHolomorphMethod) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto oracle = brute_force_oracle(n);
    EXPECT_EQ(oracle.provenance, Provenance::BruteForceOracle);
    EXPECT_EQ(oracle.entries.size(), catalog(n).entries.size());
    EXPECT_TRUE(catalogs_match(oracle, catalog(n))) << n;
  }
  EXPECT_EQ(brute_force_oracle(2).entries.size(), 1U);
  EXPECT_EQ(brute_force_oracle(3).entries.size(), 1U);
  EXPECT_THROW(brute_force_oracle(7), Error);
}

TEST(CatalogsMatch, DetectsDifferences) {
  EXPECT_FALSE(catalogs_match(catalog(4), catalog(6)));
  BraceCatalog fewer = catalog(6);
  fewer.entries.pop_back();
  EXPECT_FALSE(catalogs_match(fewer, catalog(6)));
  EXPECT_TRUE(catalogs_match(catalog(8), catalog(8)));
}

TEST(CanonicalTable, InvariantUnderAutomorphicRelabelling) {
  for (const auto& e : catalog(8).entries) {
    const auto auts = automorphisms(e.brace.additive());
    const auto key = canonical_circ_table(e.brace, auts);
    const auto& p = auts.back();
    std::vector<Elem> flat(64);
    for (Elem x = 0; x < 8; ++x) {
      for (Elem y = 0; y < 8; ++y) flat[p(x) * 8 + p(y)] = p(e.brace.circ(x, y));
    }
    const auto moved = validate_brace(e.brace.additive(), group_from_construction(8, flat));
    EXPECT_EQ(canonical_circ_table(moved, auts), key);
  }
}

TEST(CatalogQuery, Examples) {
  const auto w = catalog_query(catalog(8), "add=C2^3,mult=D8,not-right-nilpotent");
  EXPECT_FALSE(w.empty());
  for (std::size_t p : {2U, 3U, 5U}) {
    const auto all = catalog_query(catalog(p), "");
    ASSERT_EQ(all.size(), 1U);
    EXPECT_TRUE(is_trivial(all[0].brace));
    EXPECT_EQ(catalog_query(catalog(p), "trivial").size(), 1U);
  }
  const auto zero = catalog_query(catalog(1), "trivial,simple");
  EXPECT_TRUE(zero.empty());
  EXPECT_EQ(catalog_query(catalog(1), "charsimple").size(), 0U);
  EXPECT_EQ(catalog_query(catalog(1), "left-brace").size(), 1U);
  EXPECT_EQ(catalog_query(catalog(8), "left-brace").size(), 27U);
  EXPECT_EQ(catalog_query(catalog(4), "right-class=2").size() + catalog_query(catalog(4), "right-class=3").size() +
                catalog_query(catalog(4), "not-right-nilpotent").size(),
            4U);
  EXPECT_THROW(catalog_query(catalog(4), "shiny"), Error);
}

TEST(OrderCap, DefaultsAndOverrides) {
  EXPECT_THROW(braces_of_order(100), Error);
  EnumerationOptions strict;
  strict.order_cap = 5;
  try {
    braces_of_order(6, strict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
  EnumerationOptions large;
  large.allow_large = true;
  EXPECT_THROW(braces_of_order(kMaxEnumerationOrder + 1, large), Error);
  ::setenv("SKB_ORDER_CAP", "4", 1);
  EXPECT_EQ(default_order_cap(), 4U);
  ::setenv("SKB_ORDER_CAP", "junk", 1);
  EXPECT_EQ(default_order_cap(), 8U);
  ::unsetenv("SKB_ORDER_CAP");
  EXPECT_EQ(default_order_cap(), 8U);
}

}  // namespace
}  // namespace skb
