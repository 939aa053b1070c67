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

#ifndef SKB_GROUP_CATALOG_HPP_
#define SKB_GROUP_CATALOG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "skb/group.hpp"

namespace skb {

/// Z/n with a.b = a + b mod n.
GroupTable cyclic_group(std::size_t n);

/// Pairs (a, b) labelled a + |g| * b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Dihedral group of the given order (2m): r^i s^j labelled i + m * j.
GroupTable dihedral_group(std::size_t order);

/// Dicyclic group of order 4m: <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>,
/// a^i x^j labelled i + 2m * j. Order 8 gives the quaternion group.
GroupTable dicyclic_group(std::size_t order);

/// N x| H with (n1, h1)(n2, h2) = (n1 action[h1](n2), h1 h2), labelled
/// n + |N| * h. action[h] must be an automorphism of N and h -> action[h] a
/// homomorphism; this is checked.
GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<Permutation>& action);

/// A permutation group closed from generators, with the permutation for
/// each label. Products follow Permutation composition, so
/// elements[a.b] = elements[a] * elements[b].
struct PermutationGroup {
  GroupTable table;
  std::vector<Permutation> elements;

  Elem label_of(const Permutation& p) const;
};

PermutationGroup permutation_group(const std::vector<Permutation>& gens, std::size_t degree,
                                   std::size_t max_order = 10080);

PermutationGroup symmetric_group(std::size_t degree);
PermutationGroup alternating_group(std::size_t degree);

struct NamedGroup {
  std::string name;
  GroupTable table;
};

/// One representative per isomorphism class of groups of order n, for
/// 1 <= n <= 12. Throws UnsupportedOrder otherwise.
std::vector<NamedGroup> group_catalog(std::size_t n);

/// Catalog name of g ("C4", "C2^3", "D8", ...), or "order-N group" when g is
/// outside the catalog.
std::string identify_group(const GroupTable& g);

}  // namespace skb

#endif  // SKB_GROUP_CATALOG_HPP_
