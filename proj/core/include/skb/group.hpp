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

#ifndef SKB_GROUP_HPP_
#define SKB_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skb/error.hpp"
#include "skb/permutation.hpp"
#include "skb/subset.hpp"

namespace skb {

using Matrix = std::vector<std::vector<Elem>>;

/// A finite group as a Cayley table on {0, ..., n-1} with identity 0.
///
/// Instances are only produced by validate_group() or by the constructors in
/// group_catalog.hpp, so every GroupTable satisfies the group axioms.
class GroupTable {
 public:
  GroupTable() = default;

  std::size_t order() const noexcept { return order_; }
  Elem op(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  std::span<const Elem> row(Elem a) const {
    return std::span<const Elem>(table_).subspan(a * order_, order_);
  }
  std::span<const Elem> inverses() const noexcept { return inv_; }
  std::span<const Elem> flat() const noexcept { return table_; }
  Matrix to_matrix() const;

  std::size_t element_order(Elem a) const { return element_orders_[a]; }
  std::span<const std::size_t> element_orders() const noexcept { return element_orders_; }
  bool is_abelian() const noexcept { return abelian_; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.table_ == b.table_;
  }

 private:
  friend GroupTable validate_group(const Matrix& table);
  friend GroupTable group_from_construction(std::size_t n, std::vector<Elem> flat);

  GroupTable(std::size_t n, std::vector<Elem> flat, bool check_associativity);

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> element_orders_;
  bool abelian_ = true;
};

/// Checks the group axioms on a square table with identity at 0.
/// Errors: InvalidInput, NotLatinSquare, NoIdentityAtZero,
/// NonAssociative (witness a b c), MissingInverse (witness a).
GroupTable validate_group(const Matrix& table);

/// For tables that are groups by construction (products, holomorphs,
/// permutation closures). Checks the Latin property and identity at 0 but
/// skips the O(n^3) associativity scan.
GroupTable group_from_construction(std::size_t n, std::vector<Elem> flat);

/// Relabels g along p (p(0) must be 0): the result has p(a)p(b) = p(ab).
GroupTable relabel(const GroupTable& g, const Permutation& p);

/// The subgroup table on s, with s[i] relabelled to i.
GroupTable induced_subgroup(const GroupTable& g, const Subset& s);

Subset subgroup_generated(const GroupTable& g, std::span<const Elem> gens);
Subset subgroup_generated(const GroupTable& g, const Subset& gens);

bool is_subgroup(const GroupTable& g, const Subset& s);

/// Every subgroup exactly once, in canonical Subset order.
std::vector<Subset> all_subgroups(const GroupTable& g);

/// Throws NotASubgroup when s is not a subgroup.
bool is_normal(const GroupTable& g, const Subset& s);

Subset center(const GroupTable& g);

/// A small generating set chosen greedily by descending element order.
std::vector<Elem> generating_set(const GroupTable& g);

/// All automorphisms, identity first, in lexicographic order of images.
std::vector<Permutation> automorphisms(const GroupTable& g);

/// An isomorphism g1 -> g2 as a permutation of labels, if one exists.
std::optional<Permutation> are_isomorphic(const GroupTable& g1, const GroupTable& g2);

/// Pairs (a, phi) with a in g and phi in Aut(g), multiplied as
/// (a, phi)(b, psi) = (a phi(b), phi psi). The pair (a, automorphisms[k]) has
/// label a + n * k, so (0, id) is label 0.
struct Holomorph {
  GroupTable group;
  std::vector<Permutation> automorphisms;
  /// action[h] is the permutation x -> a phi(x) of the carrier of g.
  std::vector<Permutation> action;
};

Holomorph holomorph(const GroupTable& g);

/// Orbit partition of {0, ..., n-1} under the group generated by perms,
/// each orbit sorted, orbits ordered by least element.
std::vector<Subset> orbits(std::span<const Permutation> perms, std::size_t n);

}  // namespace skb

#endif  // SKB_GROUP_HPP_
