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
#include <numeric>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skb/brace.hpp"
#include "skb/group_catalog.hpp"

namespace skb {
namespace {

using fixtures::all_braces;
using fixtures::s4_factorization;

std::vector<oracle::Set> as_sets(const std::vector<Subset>& v) {
  std::vector<oracle::Set> out;
  for (const auto& s : v) out.emplace_back(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Set> sorted(std::vector<oracle::Set> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const SkewBrace& s4_brace() {
  static const SkewBrace a = exact_factorization_brace(s4_factorization());
  return a;
}

TEST(ValidateBrace, TrivialOrderTwo) {
  const auto c2 = cyclic_group(2);
  const auto a = validate_brace(c2, c2);
  EXPECT_EQ(a.order(), 2U);
  EXPECT_TRUE(is_trivial(a));
}

TEST(ValidateBrace, CompatibilityFailureCarriesWitness) {
  // Relabellings of C4 over itself: only the tables that come from the one
  // cyclic regular subgroup of Hol(C4) are compatible.
  const auto c4 = cyclic_group(4);
  std::vector<Elem> p{0, 1, 2, 3};
  std::size_t failures = 0, successes = 0;
  do {
    const auto circ = validate_group(oracle::relabel(c4.to_matrix(), p));
    try {
      validate_brace(c4, circ);
      ++successes;
    } catch (const Error& e) {
      ++failures;
      ASSERT_EQ(e.kind(), ErrorKind::CompatibilityFailure);
      ASSERT_EQ(e.witness().size(), 3U);
      const Elem x = e.witness()[0], y = e.witness()[1], z = e.witness()[2];
      const Elem lhs = circ.op(x, c4.op(y, z));
      const Elem rhs = c4.op(c4.op(circ.op(x, y), c4.inv(x)), circ.op(x, z));
      EXPECT_NE(lhs, rhs);
    }
  } while (std::next_permutation(p.begin() + 1, p.end()));
  EXPECT_EQ(successes, 2U);
  EXPECT_EQ(failures, 4U);
  EXPECT_THROW(validate_brace(cyclic_group(2), cyclic_group(3)), Error);
}

TEST(ValidateBrace, EveryLabellingOfCyclicOverKleinIsCompatible) {
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<Elem> p{0, 1, 2, 3};
  do {
    const auto circ = validate_group(oracle::relabel(cyclic_group(4).to_matrix(), p));
    EXPECT_NO_THROW(validate_brace(v4, circ));
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

TEST(ValidateBrace, ExactFactorizationOfS4) {
  const auto& a = s4_brace();
  EXPECT_EQ(a.order(), 24U);
  EXPECT_EQ(validate_brace(a.additive(), a.multiplicative()).multiplicative(), a.multiplicative());
  EXPECT_FALSE(a.is_left_brace());
}

TEST(Lambda, TrivialBraceAndZero) {
  const auto a = trivial_brace(dihedral_group(8));
  for (Elem x = 0; x < 8; ++x) EXPECT_TRUE(a.lambda(x).is_identity());
  for (const auto& b : all_braces(6)) EXPECT_TRUE(b.lambda(0).is_identity());
}

TEST(Lambda, ConjugationInsideTheLeftIdeal) {
  const auto ef = s4_factorization();
  const auto& a = s4_brace();
  const auto& g = ef.g;
  for (Elem b : ef.b) {
    for (Elem c : ef.c) {
      const Elem x = g.op(b, c);
      for (Elem gamma : ef.c) {
        const Elem expected = g.op(g.op(g.inv(c), gamma), c);
        EXPECT_EQ(a.lambda(x)(gamma), expected);
        EXPECT_TRUE(ef.c.contains(expected));
      }
    }
  }
}

TEST(Lambda, MatchesDefinitionEverywhere) {
  for (const auto& a : all_braces()) {
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem y = 0; y < a.order(); ++y) {
        EXPECT_EQ(a.lambda(x)(y), oracle::lambda(a, x, y));
        EXPECT_EQ(a.star(x, y), oracle::star(a, x, y));
      }
    }
  }
}

TEST(Star, Examples) {
  const auto t = trivial_brace(cyclic_group(6));
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) EXPECT_EQ(t.star(x, y), 0U);
  }
  for (const auto& a : all_braces(8)) {
    for (Elem x = 0; x < a.order(); ++x) {
      EXPECT_EQ(a.star(0, x), 0U);
      EXPECT_EQ(a.star(x, 0), 0U);
    }
  }
  const auto& s4 = s4_brace();
  bool nonzero = false;
  for (Elem x = 0; x < 24 && !nonzero; ++x) {
    for (Elem y = 0; y < 24 && !nonzero; ++y) nonzero = s4.star(x, y) != 0;
  }
  EXPECT_TRUE(nonzero);
}

TEST(CircInverse, Examples) {
  const auto t = trivial_brace(cyclic_group(5));
  for (Elem x = 0; x < 5; ++x) EXPECT_EQ(t.circ_inverse(x), t.neg(x));
  const auto& s4 = s4_brace();
  EXPECT_EQ(s4.circ_inverse(0), 0U);
  for (Elem x = 0; x < 24; ++x) EXPECT_EQ(s4.circ(x, s4.circ_inverse(x)), 0U);
}

TEST(IsTrivial, Examples) {
  EXPECT_TRUE(is_trivial(trivial_brace(cyclic_group(2))));
  EXPECT_FALSE(is_trivial(s4_brace()));
  EXPECT_TRUE(is_trivial(trivial_brace(cyclic_group(1))));
}

TEST(ClassifySubset, Examples) {
  const auto& s4 = s4_brace();
  const auto zero = classify_subset(s4, Subset::zero(24));
  EXPECT_TRUE(zero.is_ideal);
  EXPECT_TRUE(zero.is_trivial_subbrace);
  EXPECT_TRUE(classify_subset(s4, Subset::full(24)).is_ideal);
  const auto ef = s4_factorization();
  EXPECT_TRUE(classify_subset(s4, ef.c).is_left_ideal);
  EXPECT_FALSE(classify_subset(s4, ef.b).is_left_ideal);
  Elem three = 1;
  while (s4.additive().element_order(three) != 3) ++three;
  EXPECT_FALSE(classify_subset(s4, Subset(24, {0, three})).is_subgroup);
}

TEST(Ideals, ChainAndTrivialBraceOnPrimeOrder) {
  for (std::size_t p : {2U, 3U, 5U, 7U}) {
    const auto a = trivial_brace(cyclic_group(p));
    const auto ids = ideals(a);
    ASSERT_EQ(ids.size(), 2U);
    EXPECT_TRUE(ids[0].is_zero());
    EXPECT_TRUE(ids[1].is_full());
  }
  for (const auto& a : all_braces()) {
    const auto l = left_ideals(a);
    const auto s = strong_left_ideals(a);
    const auto i = ideals(a);
    for (const auto& x : i) EXPECT_NE(std::find(s.begin(), s.end(), x), s.end());
    for (const auto& x : s) EXPECT_NE(std::find(l.begin(), l.end(), x), l.end());
  }
}

TEST(Ideals, MatchBruteForce) {
  for (const auto& a : all_braces()) {
    EXPECT_EQ(as_sets(left_ideals(a)), sorted(oracle::left_ideals(a)));
    EXPECT_EQ(as_sets(ideals(a)), sorted(oracle::ideals(a)));
    for (const auto& s : left_ideals(a)) {
      EXPECT_EQ(is_strong_left_ideal(a, s), oracle::normal(a.additive(), {s.begin(), s.end()}));
      EXPECT_TRUE(is_subgroup(a.multiplicative(), s));
    }
  }
}

TEST(Ideals, FactorXIsNotALeftIdealInS4) {
  const auto ef = s4_factorization();
  const auto ls = left_ideals(s4_brace());
  EXPECT_EQ(std::find(ls.begin(), ls.end(), ef.b), ls.end());
  EXPECT_NE(std::find(ls.begin(), ls.end(), ef.c), ls.end());
}

TEST(SocleAndFix, Examples) {
  EXPECT_TRUE(socle(trivial_brace(direct_product(cyclic_group(2), cyclic_group(4)))).is_full());
  EXPECT_EQ(socle(trivial_brace(dihedral_group(6))), Subset::zero(6));
  for (const auto& a : all_braces()) {
    const auto soc = socle(a);
    const auto fx = fix(a);
    EXPECT_TRUE(fx.contains(0));
    EXPECT_EQ(oracle::Set(soc.begin(), soc.end()), oracle::socle(a));
    EXPECT_EQ(oracle::Set(fx.begin(), fx.end()), oracle::fix(a));
    EXPECT_TRUE(is_ideal(a, soc));
    EXPECT_TRUE(is_left_ideal(a, fx));
    EXPECT_TRUE(soc.is_subset_of(ker_lambda(a)));
  }
}

TEST(StarProduct, Examples) {
  const auto t = trivial_brace(cyclic_group(6));
  EXPECT_EQ(star_product(t, Subset::full(6), Subset::full(6)), Subset::zero(6));
  const auto& s4 = s4_brace();
  EXPECT_EQ(star_product(s4, Subset::zero(24), Subset::full(24)), Subset::zero(24));
  EXPECT_EQ(star_product(s4, Subset::full(24), Subset::zero(24)), Subset::zero(24));
  EXPECT_FALSE(star_product(s4, Subset::full(24), Subset::full(24)).is_zero());
}

TEST(RightSeries, Examples) {
  const auto zero = trivial_brace(cyclic_group(1));
  EXPECT_EQ(right_nilpotency_class(zero), 1U);
  EXPECT_EQ(right_series(zero).size(), 1U);
  const auto t = trivial_brace(cyclic_group(4));
  EXPECT_EQ(right_series(t)[1], Subset::zero(4));
  EXPECT_EQ(right_nilpotency_class(t), 2U);
  EXPECT_FALSE(right_nilpotency_class(fixtures::not_right_nilpotent_witness()).has_value());
  EXPECT_FALSE(right_nilpotency_class(s4_brace()).has_value());
}

TEST(RightSeries, MatchesBruteForce) {
  for (const auto& a : all_braces()) {
    EXPECT_EQ(right_nilpotency_class(a), oracle::right_class(a));
    const auto series = right_series(a);
    ASSERT_FALSE(series.empty());
    EXPECT_TRUE(series.front().is_full());
    for (const auto& term : series) EXPECT_TRUE(is_ideal(a, term));
    for (std::size_t k = 1; k < series.size(); ++k) {
      EXPECT_TRUE(series[k].is_subset_of(series[k - 1]));
      EXPECT_NE(series[k], series[k - 1]);
    }
  }
}

TEST(MetaTrivial, Examples) {
  EXPECT_TRUE(is_meta_trivial(trivial_brace(cyclic_group(6))));
  for (const auto& a : all_braces()) {
    if (star_product(a, Subset::full(a.order()), Subset::full(a.order())).is_zero()) {
      EXPECT_TRUE(is_meta_trivial(a));
    }
  }
}

TEST(MetaTrivial, MatchesDefinition) {
  auto braces = all_braces();
  braces.push_back(s4_brace());
  std::size_t meta = 0;
  for (const auto& a : braces) {
    oracle::Set all(a.order());
    std::iota(all.begin(), all.end(), 0);
    const auto a2 = oracle::star_product(a, all, all);
    bool trivial = true;
    for (Elem x : a2) {
      for (Elem y : a2) trivial = trivial && a.add(x, y) == a.circ(x, y);
    }
    EXPECT_EQ(is_meta_trivial(a), trivial);
    meta += trivial;
  }
  EXPECT_GT(meta, 0U);
}

TEST(SubBraceAndQuotient, Examples) {
  const auto& s4 = s4_brace();
  EXPECT_EQ(sub_brace(s4, Subset::zero(24)).order(), 1U);
  EXPECT_EQ(quotient(s4, Subset::full(24)).order(), 1U);
  const auto t = trivial_brace(cyclic_group(6));
  EXPECT_EQ(quotient(t, socle(t)).order(), 1U);
  EXPECT_EQ(sub_brace(s4, s4_factorization().c).order(), 8U);
  EXPECT_THROW(sub_brace(s4, s4_factorization().b), Error);
  EXPECT_THROW(quotient(trivial_brace(dihedral_group(6)), Subset(6, {0, 3})), Error);
}

TEST(SubBraceAndQuotient, QuotientOrders) {
  for (const auto& a : all_braces()) {
    for (const auto& i : ideals(a)) EXPECT_EQ(quotient(a, i).order() * i.size(), a.order());
  }
}

TEST(IdealGenerated, Examples) {
  for (const auto& a : all_braces(6)) {
    EXPECT_EQ(ideal_generated(a, Subset::zero(a.order())), Subset::zero(a.order()));
    EXPECT_TRUE(ideal_generated(a, Subset::full(a.order())).is_full());
  }
  const auto s = trivial_brace(cyclic_group(3));
  const std::vector<SkewBrace> two{s, s};
  const auto sq = direct_product_braces(two);
  EXPECT_EQ(ideal_generated(sq, Subset(9, {1})), Subset(9, {0, 1, 2}));
  EXPECT_EQ(ideal_generated(sq, Subset(9, {3})), Subset(9, {0, 3, 6}));
}

TEST(IdealGenerated, IsTheSmallestIdealContainingTheSet) {
  for (const auto& a : all_braces()) {
    const auto ids = ideals(a);
    for (Elem x = 0; x < a.order(); ++x) {
      const auto gen = ideal_generated(a, Subset(a.order(), {x}));
      EXPECT_TRUE(is_ideal(a, gen));
      for (const auto& i : ids) {
        if (i.contains(x)) EXPECT_TRUE(gen.is_subset_of(i));
      }
    }
  }
}

TEST(Characteristic, Examples) {
  EXPECT_TRUE(is_characteristically_simple(trivial_brace(cyclic_group(5))));
  const auto c4 = trivial_brace(cyclic_group(4));
  const auto chars = characteristic_ideals(c4);
  EXPECT_NE(std::find(chars.begin(), chars.end(), Subset(4, {0, 2})), chars.end());
  EXPECT_FALSE(is_characteristically_simple(c4));
  EXPECT_TRUE(is_characteristically_simple(trivial_brace(direct_product(cyclic_group(2), cyclic_group(2)))));
  EXPECT_FALSE(is_characteristically_simple(trivial_brace(cyclic_group(1))));
}

TEST(BraceAutomorphisms, MatchBruteForce) {
  for (const auto& a : all_braces(7)) {
    std::vector<std::vector<Elem>> lib;
    for (const auto& p : brace_automorphisms(a)) lib.emplace_back(p.images().begin(), p.images().end());
    std::vector<std::vector<Elem>> brute;
    for (auto f : oracle::automorphisms(a.additive())) {
      if (oracle::preserves(a.multiplicative(), f)) brute.push_back(f);
    }
    std::sort(lib.begin(), lib.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(lib, brute);
  }
}

TEST(BraceAutomorphisms, IntertwineLambda) {
  for (const auto& a : all_braces()) {
    for (const auto& s : brace_automorphisms(a)) {
      for (Elem x = 0; x < a.order(); ++x) EXPECT_EQ(s * a.lambda(x), a.lambda(s(x)) * s);
    }
  }
}

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(trivial_brace(cyclic_group(7))));
  EXPECT_FALSE(is_simple(trivial_brace(cyclic_group(4))));
  EXPECT_FALSE(is_simple(trivial_brace(cyclic_group(1))));
}

TEST(Isomorphism, Examples) {
  const auto& s4 = s4_brace();
  const auto self = are_isomorphic_braces(s4, s4);
  ASSERT_TRUE(self.has_value());
  const auto c2 = trivial_brace(cyclic_group(2));
  const std::vector<SkewBrace> two{c2, c2};
  EXPECT_TRUE(are_isomorphic_braces(direct_product_braces(two),
                                    trivial_brace(direct_product(cyclic_group(2), cyclic_group(2))))
                  .has_value());
  EXPECT_FALSE(decompose_as_power_of_simple(trivial_brace(cyclic_group(6))).has_value());
}

TEST(Isomorphism, RelabelledBracesAreFound) {
  for (const auto& a : fixtures::catalog(6).entries) {
    const std::vector<Elem> p{0, 3, 5, 1, 4, 2};
    const auto add = validate_group(oracle::relabel(a.brace.additive().to_matrix(), p));
    const auto circ = validate_group(oracle::relabel(a.brace.multiplicative().to_matrix(), p));
    const auto b = validate_brace(add, circ);
    const auto iso = are_isomorphic_braces(a.brace, b);
    ASSERT_TRUE(iso.has_value());
    for (Elem x = 0; x < 6; ++x) {
      for (Elem y = 0; y < 6; ++y) {
        EXPECT_EQ((*iso)(a.brace.add(x, y)), b.add((*iso)(x), (*iso)(y)));
        EXPECT_EQ((*iso)(a.brace.circ(x, y)), b.circ((*iso)(x), (*iso)(y)));
      }
    }
  }
}

TEST(Decomposition, PowersOfSimpleBraces) {
  const auto v4 = trivial_brace(direct_product(cyclic_group(2), cyclic_group(2)));
  const auto d = decompose_as_power_of_simple(v4);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->exponent, 2U);
  EXPECT_EQ(d->factor.order(), 2U);
  const auto c5 = decompose_as_power_of_simple(trivial_brace(cyclic_group(5)));
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->exponent, 1U);
  EXPECT_FALSE(decompose_as_power_of_simple(trivial_brace(cyclic_group(1))).has_value());
}

}  // namespace
}  // namespace skb
