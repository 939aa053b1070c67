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

#include <algorithm>

#include "hom_search.hpp"
#include "skb/brace.hpp"

namespace skb {

namespace {

bool preserves_circ(const SkewBrace& a, const SkewBrace& b, const std::vector<Elem>& map) {
  const std::size_t n = a.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (map[a.circ(x, y)] != b.circ(map[x], map[y])) return false;
    }
  }
  return true;
}

// Bijections a -> b that are additive isomorphisms (driven by additive
// generators of a) and preserve o. Images of a generator must match both its
// additive and its multiplicative order.
void for_each_brace_isomorphism(const SkewBrace& a, const SkewBrace& b,
                                const std::function<bool(const std::vector<Elem>&)>& visit) {
  if (a.order() != b.order()) return;
  const auto gens = generating_set(a.additive());
  detail::for_each_isomorphism(
      a.additive(), b.additive(), gens,
      [&](std::size_t i, Elem t) {
        return b.additive().element_order(t) == a.additive().element_order(gens[i]) &&
               b.multiplicative().element_order(t) == a.multiplicative().element_order(gens[i]);
      },
      [&](const std::vector<Elem>& map) {
        if (!preserves_circ(a, b, map)) return true;
        return visit(map);
      });
}

std::vector<std::size_t> sorted_profile(std::span<const std::size_t> orders) {
  std::vector<std::size_t> p(orders.begin(), orders.end());
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::vector<Permutation> brace_automorphisms(const SkewBrace& a) {
  std::vector<Permutation> result;
  for_each_brace_isomorphism(a, a, [&](const std::vector<Elem>& map) {
    result.emplace_back(map);
    return true;
  });
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Subset> characteristic_ideals(const SkewBrace& a) {
  const auto auts = brace_automorphisms(a);
  std::vector<Subset> result;
  for (const auto& s : ideals(a)) {
    if (classify_subset(a, s, auts).is_characteristic) result.push_back(s);
  }
  return result;
}

bool is_characteristically_simple(const SkewBrace& a) {
  if (a.order() < 2) return false;
  const auto chars = characteristic_ideals(a);
  return std::all_of(chars.begin(), chars.end(),
                     [](const Subset& s) { return s.is_zero() || s.is_full(); });
}

bool is_simple(const SkewBrace& a) { return a.order() > 1 && ideals(a).size() == 2; }

std::vector<Subset> minimal_ideals(const SkewBrace& a) {
  const auto all = ideals(a);
  std::vector<Subset> result;
  for (const auto& s : all) {
    if (s.is_zero()) continue;
    const bool minimal = std::none_of(all.begin(), all.end(), [&](const Subset& t) {
      return !t.is_zero() && t != s && t.is_subset_of(s);
    });
    if (minimal) result.push_back(s);
  }
  return result;
}

std::optional<Permutation> are_isomorphic_braces(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (sorted_profile(a.additive().element_orders()) !=
          sorted_profile(b.additive().element_orders()) ||
      sorted_profile(a.multiplicative().element_orders()) !=
          sorted_profile(b.multiplicative().element_orders())) {
    return std::nullopt;
  }
  std::optional<Permutation> found;
  for_each_brace_isomorphism(a, b, [&](const std::vector<Elem>& map) {
    found.emplace(map);
    return false;
  });
  return found;
}

std::optional<PowerDecomposition> decompose_as_power_of_simple(const SkewBrace& a) {
  const std::size_t n = a.order();
  for (const auto& minimal : minimal_ideals(a)) {
    SkewBrace factor = sub_brace(a, minimal);
    if (!is_simple(factor)) continue;
    std::size_t exponent = 1, power = factor.order();
    while (power < n) {
      power *= factor.order();
      ++exponent;
    }
    if (power != n) continue;
    std::vector<SkewBrace> copies(exponent, factor);
    SkewBrace product = direct_product_braces(copies);
    if (auto iso = are_isomorphic_braces(a, product)) {
      return PowerDecomposition{std::move(factor), exponent, minimal, std::move(*iso)};
    }
  }
  return std::nullopt;
}

}  // namespace skb
