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

#include "skb/group_catalog.hpp"

#include <algorithm>
#include <map>

namespace skb {

GroupTable cyclic_group(std::size_t n) {
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return group_from_construction(n, std::move(flat));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t ng = g.order();
  const std::size_t n = ng * h.order();
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem a = g.op(static_cast<Elem>(x % ng), static_cast<Elem>(y % ng));
      const Elem b = h.op(static_cast<Elem>(x / ng), static_cast<Elem>(y / ng));
      flat[x * n + y] = static_cast<Elem>(a + ng * b);
    }
  }
  return group_from_construction(n, std::move(flat));
}

GroupTable dihedral_group(std::size_t order) {
  if (order < 2 || order % 2) throw Error(ErrorKind::InvalidInput, "dihedral order must be even");
  const std::size_t m = order / 2;
  std::vector<Elem> flat(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % m, j = x / m;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % m, l = y / m;
      const std::size_t rot = j == 0 ? (i + k) % m : (i + m - k) % m;
      flat[x * order + y] = static_cast<Elem>(rot + m * ((j + l) % 2));
    }
  }
  return group_from_construction(order, std::move(flat));
}

GroupTable dicyclic_group(std::size_t order) {
  if (order < 4 || order % 4) throw Error(ErrorKind::InvalidInput, "dicyclic order must be 4m");
  const std::size_t m = order / 4;
  const std::size_t c = 2 * m;  // order of a
  std::vector<Elem> flat(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % c, j = x / c;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % c, l = y / c;
      std::size_t power, xs;
      if (j == 0) {
        power = (i + k) % c;
        xs = l;
      } else if (l == 0) {
        power = (i + c - k) % c;
        xs = 1;
      } else {
        power = (i + c - k + m) % c;
        xs = 0;
      }
      flat[x * order + y] = static_cast<Elem>(power + c * xs);
    }
  }
  return group_from_construction(order, std::move(flat));
}

GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<Permutation>& action) {
  const std::size_t nn = normal.order(), nh = acting.order();
  if (action.size() != nh) throw Error(ErrorKind::InvalidInput, "one automorphism per element");
  for (Elem h = 0; h < nh; ++h) {
    const auto& phi = action[h];
    if (phi.size() != nn) throw Error(ErrorKind::InvalidInput, "automorphism degree mismatch");
    for (Elem a = 0; a < nn; ++a) {
      for (Elem b = 0; b < nn; ++b) {
        if (phi(normal.op(a, b)) != normal.op(phi(a), phi(b))) {
          throw Error(ErrorKind::InvalidInput, "action is not by automorphisms", {h});
        }
      }
    }
    for (Elem k = 0; k < nh; ++k) {
      if (action[acting.op(h, k)] != action[h] * action[k]) {
        throw Error(ErrorKind::InvalidInput, "action is not a homomorphism", {h, k});
      }
    }
  }
  const std::size_t n = nn * nh;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem a = static_cast<Elem>(x % nn), h = static_cast<Elem>(x / nn);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem b = static_cast<Elem>(y % nn), k = static_cast<Elem>(y / nn);
      flat[x * n + y] = static_cast<Elem>(normal.op(a, action[h](b)) + nn * acting.op(h, k));
    }
  }
  return group_from_construction(n, std::move(flat));
}

Elem PermutationGroup::label_of(const Permutation& p) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == p) return static_cast<Elem>(i);
  }
  throw Error(ErrorKind::InvalidInput, "permutation is not in the group");
}

PermutationGroup permutation_group(const std::vector<Permutation>& gens, std::size_t degree,
                                   std::size_t max_order) {
  PermutationGroup pg;
  std::map<Permutation, Elem> index;
  pg.elements.push_back(Permutation::identity(degree));
  index.emplace(pg.elements.front(), 0);
  for (std::size_t i = 0; i < pg.elements.size(); ++i) {
    for (const auto& s : gens) {
      Permutation y = pg.elements[i] * s;
      if (index.emplace(y, static_cast<Elem>(pg.elements.size())).second) {
        pg.elements.push_back(std::move(y));
        if (pg.elements.size() > max_order) {
          throw Error(ErrorKind::GroupTooLarge, "permutation group exceeds the order cap");
        }
      }
    }
  }
  const std::size_t n = pg.elements.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = index.at(pg.elements[a] * pg.elements[b]);
    }
  }
  pg.table = group_from_construction(n, std::move(flat));
  return pg;
}

PermutationGroup symmetric_group(std::size_t degree) {
  if (degree <= 1) return permutation_group({}, degree);
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1}})};
  if (degree > 2) {
    std::vector<Elem> cycle(degree);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<Elem>(i);
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return permutation_group(gens, degree);
}

PermutationGroup alternating_group(std::size_t degree) {
  std::vector<Permutation> gens;
  for (Elem k = 2; k < degree; ++k) gens.push_back(Permutation::from_cycles(degree, {{0, 1, k}}));
  return permutation_group(gens, degree);
}

namespace {

GroupTable c(std::size_t n) { return cyclic_group(n); }
GroupTable x(const GroupTable& a, const GroupTable& b) { return direct_product(a, b); }

}  // namespace

std::vector<NamedGroup> group_catalog(std::size_t n) {
  switch (n) {
    case 1: return {{"C1", c(1)}};
    case 2: return {{"C2", c(2)}};
    case 3: return {{"C3", c(3)}};
    case 4: return {{"C4", c(4)}, {"C2^2", x(c(2), c(2))}};
    case 5: return {{"C5", c(5)}};
    case 6: return {{"C6", c(6)}, {"S3", dihedral_group(6)}};
    case 7: return {{"C7", c(7)}};
    case 8:
      return {{"C8", c(8)},
              {"C4xC2", x(c(4), c(2))},
              {"C2^3", x(x(c(2), c(2)), c(2))},
              {"D8", dihedral_group(8)},
              {"Q8", dicyclic_group(8)}};
    case 9: return {{"C9", c(9)}, {"C3^2", x(c(3), c(3))}};
    case 10: return {{"C10", c(10)}, {"D10", dihedral_group(10)}};
    case 11: return {{"C11", c(11)}};
    case 12:
      return {{"C12", c(12)},
              {"C6xC2", x(c(6), c(2))},
              {"D12", dihedral_group(12)},
              {"A4", alternating_group(4).table},
              {"Dic12", dicyclic_group(12)}};
    default:
      throw Error(ErrorKind::UnsupportedOrder, "group catalog covers orders 1..12",
                  {static_cast<Elem>(n)});
  }
}

std::string identify_group(const GroupTable& g) {
  if (g.order() >= 1 && g.order() <= 12) {
    for (const auto& entry : group_catalog(g.order())) {
      if (are_isomorphic(g, entry.table)) return entry.name;
    }
  }
  return "order-" + std::to_string(g.order()) + " group";
}

}  // namespace skb
