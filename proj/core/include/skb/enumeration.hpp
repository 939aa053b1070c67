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

#ifndef SKB_ENUMERATION_HPP_
#define SKB_ENUMERATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "skb/brace.hpp"

namespace skb {

/// Hard ceiling on enumeration, whatever the configured cap.
inline constexpr std::size_t kMaxEnumerationOrder = 18;

/// SKB_ORDER_CAP from the environment if set to a positive integer, else 8.
std::size_t default_order_cap();

struct EnumerationOptions {
  std::size_t order_cap = default_order_cap();
  /// Admit orders above the cap up to kMaxEnumerationOrder (warns on stderr).
  bool allow_large = false;
};

/// Number of regular subgroups of Hol(add), counted without any symmetry
/// reduction.
std::size_t count_regular_subgroups(const GroupTable& add);

/// One brace per isomorphism class with additive group `add`, read off the
/// regular subgroups of its holomorph. Entries are relabelled to the
/// lexicographically least multiplicative table under Aut(add) and sorted by
/// that table. Throws OrderCapExceeded.
std::vector<SkewBrace> skew_braces_on(const GroupTable& add, const EnumerationOptions& options = {});

/// The multiplicative table of `brace` relabelled by the automorphism of
/// (A, +) that makes it lexicographically least.
std::vector<Elem> canonical_circ_table(const SkewBrace& brace,
                                       const std::vector<Permutation>& add_automorphisms);

enum class Provenance { Holomorph, BruteForceOracle };
std::string_view to_string(Provenance p);

struct CatalogEntry {
  SkewBrace brace;
  std::string add_name;
  std::string mult_name;
};

struct BraceCatalog {
  std::size_t order = 0;
  std::vector<CatalogEntry> entries;
  Provenance provenance = Provenance::Holomorph;
};

/// Union of skew_braces_on over group_catalog(n).
BraceCatalog braces_of_order(std::size_t n, const EnumerationOptions& options = {});

/// Independent check for n <= 6: fills multiplicative tables row by row from
/// the compatibility law alone, keeps the ones that validate, and dedups by
/// brace isomorphism. Throws OrderCapExceeded for n > 6.
BraceCatalog brute_force_oracle(std::size_t n);

/// True if the catalogs have equal size and pair up one-to-one under
/// are_isomorphic_braces.
bool catalogs_match(const BraceCatalog& a, const BraceCatalog& b);

/// Filters by a comma-separated predicate list, for example
/// "add=C2^3,mult=D8,not-right-nilpotent". Recognised predicates:
///   add=NAME, mult=NAME, left-brace, trivial, non-trivial, simple,
///   not-simple, right-class=K, right-nilpotent, not-right-nilpotent,
///   trivial-trivial-factorization, no-trivial-trivial-factorization,
///   charsimple, not-charsimple.
/// Throws UnknownPredicate.
std::vector<CatalogEntry> catalog_query(const BraceCatalog& catalog, std::string_view predicates);

}  // namespace skb

#endif  // SKB_ENUMERATION_HPP_
