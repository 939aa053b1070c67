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
#include <limits>

#include "hom_search.hpp"
#include "skb/group.hpp"

namespace skb {

namespace detail {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

// Extends the images of gens[0..depth] to the subgroup they generate.
// Returns false if the assignment is not a well-defined injective map.
bool extend(const GroupTable& src, const GroupTable& dst, std::span<const Elem> gens,
            std::span<const Elem> images, std::size_t depth, std::vector<Elem>& map,
            std::vector<char>& used) {
  std::fill(map.begin(), map.end(), kUnset);
  std::fill(used.begin(), used.end(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem x = queue[q];
    for (std::size_t i = 0; i <= depth; ++i) {
      const Elem y = src.op(x, gens[i]);
      const Elem expected = dst.op(map[x], images[i]);
      if (map[y] == kUnset) {
        if (used[expected]) return false;
        map[y] = expected;
        used[expected] = 1;
        queue.push_back(y);
      } else if (map[y] != expected) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

void for_each_isomorphism(const GroupTable& src, const GroupTable& dst,
                          std::span<const Elem> gens,
                          const std::function<bool(std::size_t, Elem)>& candidate,
                          const std::function<bool(const std::vector<Elem>&)>& visit) {
  const std::size_t n = src.order();
  if (dst.order() != n) return;
  if (gens.empty()) {
    // Trivial group.
    visit(std::vector<Elem>{0});
    return;
  }
  std::vector<Elem> images(gens.size(), 0);
  std::vector<Elem> map(n, kUnset);
  std::vector<char> used(n, 0);
  bool stop = false;

  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    for (Elem t = 1; t < n && !stop; ++t) {
      if (!candidate(depth, t)) continue;
      images[depth] = t;
      if (!extend(src, dst, gens, images, depth, map, used)) continue;
      if (depth + 1 == gens.size()) {
        // gens generate src, so the map is total and injective.
        if (!visit(map)) stop = true;
      } else {
        recurse(depth + 1);
      }
    }
  };
  recurse(0);
}

}  // namespace detail

std::vector<Permutation> automorphisms(const GroupTable& g) {
  const auto gens = generating_set(g);
  std::vector<Permutation> result;
  detail::for_each_isomorphism(
      g, g, gens,
      [&](std::size_t i, Elem t) { return g.element_order(t) == g.element_order(gens[i]); },
      [&](const std::vector<Elem>& map) {
        result.emplace_back(map);
        return true;
      });
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Permutation> are_isomorphic(const GroupTable& g1, const GroupTable& g2) {
  if (g1.order() != g2.order() || g1.is_abelian() != g2.is_abelian()) return std::nullopt;
  std::vector<std::size_t> p1(g1.element_orders().begin(), g1.element_orders().end());
  std::vector<std::size_t> p2(g2.element_orders().begin(), g2.element_orders().end());
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  if (p1 != p2) return std::nullopt;

  const auto gens = generating_set(g1);
  std::optional<Permutation> found;
  detail::for_each_isomorphism(
      g1, g2, gens,
      [&](std::size_t i, Elem t) { return g2.element_order(t) == g1.element_order(gens[i]); },
      [&](const std::vector<Elem>& map) {
        found.emplace(map);
        return false;
      });
  return found;
}

Holomorph holomorph(const GroupTable& g) {
  Holomorph h;
  h.automorphisms = automorphisms(g);
  const auto& auts = h.automorphisms;
  const std::size_t n = g.order();
  const std::size_t m = auts.size();
  const std::size_t size = n * m;

  std::vector<std::size_t> compose(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Permutation c = auts[i] * auts[j];
      compose[i * m + j] = static_cast<std::size_t>(
          std::lower_bound(auts.begin(), auts.end(), c) - auts.begin());
    }
  }

  std::vector<Elem> flat(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    const Elem a = static_cast<Elem>(x % n);
    const std::size_t i = x / n;
    for (std::size_t y = 0; y < size; ++y) {
      const Elem b = static_cast<Elem>(y % n);
      const std::size_t j = y / n;
      flat[x * size + y] = static_cast<Elem>(g.op(a, auts[i](b)) + n * compose[i * m + j]);
    }
  }
  h.group = group_from_construction(size, std::move(flat));

  h.action.reserve(size);
  for (std::size_t x = 0; x < size; ++x) {
    const Elem a = static_cast<Elem>(x % n);
    const auto& phi = auts[x / n];
    std::vector<Elem> images(n);
    for (Elem p = 0; p < n; ++p) images[p] = g.op(a, phi(p));
    h.action.emplace_back(std::move(images));
  }
  return h;
}

}  // namespace skb
