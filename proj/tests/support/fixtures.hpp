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

#ifndef SKB_TESTS_FIXTURES_HPP_
#define SKB_TESTS_FIXTURES_HPP_

#include <string>

#include "skb/enumeration.hpp"
#include "skb/factorization.hpp"
#include "skb/group_catalog.hpp"
#include "skb/ybe.hpp"

namespace skb::fixtures {

inline Permutation cycles(std::size_t n, std::vector<std::vector<Elem>> cs) {
  return Permutation::from_cycles(n, cs);
}

// The order-4 solution with sigma_1 = (34), ..., tau_4 = (13), shifted to
// 0-based points.
inline Solution example_solution() {
  const std::vector<Permutation> sigma{cycles(4, {{2, 3}}), cycles(4, {{0, 2, 1, 3}}),
                                       cycles(4, {{0, 3, 1, 2}}), cycles(4, {{0, 1}})};
  const std::vector<Permutation> tau{cycles(4, {{1, 3}}), cycles(4, {{0, 3, 2, 1}}),
                                     cycles(4, {{0, 1, 2, 3}}), cycles(4, {{0, 2}})};
  Matrix s, t;
  for (const auto& p : sigma) s.emplace_back(p.images().begin(), p.images().end());
  for (const auto& p : tau) t.emplace_back(p.images().begin(), p.images().end());
  return validate_solution(s, t);
}

// S4 = X Y with X = <(243)> and Y = <(34), (13)(24), (14)(23)>, 0-based.
inline ExactFactorization s4_factorization() {
  const PermutationGroup s4 = symmetric_group(4);
  auto label = [&](std::vector<std::vector<Elem>> cs) { return s4.label_of(cycles(4, cs)); };
  const std::vector<Elem> x{label({{1, 3, 2}})};
  const std::vector<Elem> y{label({{2, 3}}), label({{0, 2}, {1, 3}}), label({{0, 3}, {1, 2}})};
  return {s4.table, subgroup_generated(s4.table, x), subgroup_generated(s4.table, y)};
}

inline const BraceCatalog& catalog(std::size_t n) {
  static std::vector<BraceCatalog> cache = [] {
    std::vector<BraceCatalog> v;
    for (std::size_t k = 1; k <= 8; ++k) v.push_back(braces_of_order(k));
    return v;
  }();
  return cache.at(n - 1);
}

inline bool has_trivial_trivial(const SkewBrace& a) {
  FactorizationQuery q;
  q.trivial_b = q.trivial_c = true;
  return !find_factorizations(a, q).empty();
}

// Order-8 braces with additive C2^3 and multiplicative D8.
inline std::vector<SkewBrace> c2cubed_d8() {
  std::vector<SkewBrace> out;
  for (const auto& e : catalog(8).entries) {
    if (e.add_name == "C2^3" && e.mult_name == "D8") out.push_back(e.brace);
  }
  return out;
}

inline SkewBrace not_right_nilpotent_witness() {
  for (const auto& b : c2cubed_d8()) {
    if (!right_nilpotency_class(b)) return b;
  }
  throw Error(ErrorKind::PreconditionViolated, "no witness in the order-8 catalog");
}

inline SkewBrace factorized_witness() {
  for (const auto& b : c2cubed_d8()) {
    if (right_nilpotency_class(b) && has_trivial_trivial(b)) return b;
  }
  throw Error(ErrorKind::PreconditionViolated, "no witness in the order-8 catalog");
}

inline std::vector<SkewBrace> all_braces(std::size_t max_order = 8) {
  std::vector<SkewBrace> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (const auto& e : catalog(n).entries) out.push_back(e.brace);
  }
  return out;
}

inline Subset subset(std::size_t n, std::vector<Elem> xs) { return Subset(n, std::move(xs)); }

inline Subset to_subset(std::size_t n, const std::vector<Elem>& xs) { return Subset(n, xs); }

}  // namespace skb::fixtures

#endif  // SKB_TESTS_FIXTURES_HPP_
