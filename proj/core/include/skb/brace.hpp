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

#ifndef SKB_BRACE_HPP_
#define SKB_BRACE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skb/group.hpp"
#include "skb/permutation.hpp"
#include "skb/subset.hpp"

namespace skb {

/// A finite skew left brace (A, +, o): two groups on {0, ..., n-1} sharing
/// the identity 0 such that a o (b + c) = a o b - a + a o c.
///
/// The lambda maps lambda_a(b) = -a + a o b are cached at construction.
class SkewBrace {
 public:
  SkewBrace() = default;

  std::size_t order() const noexcept { return add_.order(); }
  const GroupTable& additive() const noexcept { return add_; }
  const GroupTable& multiplicative() const noexcept { return circ_; }

  Elem add(Elem a, Elem b) const { return add_.op(a, b); }
  Elem neg(Elem a) const { return add_.inv(a); }
  /// a - b, i.e. a + (-b).
  Elem sub(Elem a, Elem b) const { return add_.op(a, add_.inv(b)); }
  Elem circ(Elem a, Elem b) const { return circ_.op(a, b); }
  /// a', the inverse of a in (A, o).
  Elem circ_inverse(Elem a) const { return circ_.inv(a); }

  const Permutation& lambda(Elem a) const { return lambda_[a]; }
  /// a * b = lambda_a(b) - b.
  Elem star(Elem a, Elem b) const { return sub(lambda_[a](b), b); }

  /// Abelian additive group.
  bool is_left_brace() const noexcept { return add_.is_abelian(); }

 private:
  friend SkewBrace validate_brace(const GroupTable& add, const GroupTable& circ);

  GroupTable add_;
  GroupTable circ_;
  std::vector<Permutation> lambda_;
};

/// Errors: OrderMismatch; CompatibilityFailure with witness (a, b, c).
SkewBrace validate_brace(const GroupTable& add, const GroupTable& circ);

/// The brace with a o b = a + lambda(a)(b), for a map a -> lambda(a) into
/// Aut(A, +). Validated like any other brace.
SkewBrace brace_from_lambda(const GroupTable& add, std::span<const Permutation> lambda);

/// + and o coincide.
SkewBrace trivial_brace(const GroupTable& g);

bool is_trivial(const SkewBrace& a);

/// Componentwise product; labels combine as in direct_product().
SkewBrace direct_product_braces(std::span<const SkewBrace> factors);

// ---------------------------------------------------------------------------
// Ideal theory

struct IdealReport {
  Subset subset;
  bool is_subgroup = false;  // false marks a NotSubgroup input
  bool is_left_ideal = false;
  bool is_strong_left_ideal = false;
  bool is_ideal = false;
  bool is_trivial_subbrace = false;
  bool is_characteristic = false;
};

IdealReport classify_subset(const SkewBrace& a, const Subset& s);
/// Same, reusing a precomputed brace automorphism list.
IdealReport classify_subset(const SkewBrace& a, const Subset& s,
                            std::span<const Permutation> brace_auts);

bool is_left_ideal(const SkewBrace& a, const Subset& s);
bool is_strong_left_ideal(const SkewBrace& a, const Subset& s);
bool is_ideal(const SkewBrace& a, const Subset& s);
/// x + y = x o y for all x, y in s.
bool is_trivial_subbrace(const SkewBrace& a, const Subset& s);

std::vector<Subset> left_ideals(const SkewBrace& a);
std::vector<Subset> strong_left_ideals(const SkewBrace& a);
std::vector<Subset> ideals(const SkewBrace& a);

/// Ker(lambda) intersected with the center of (A, +).
Subset socle(const SkewBrace& a);
/// Elements fixed by every lambda_b.
Subset fix(const SkewBrace& a);
Subset ker_lambda(const SkewBrace& a);

/// Additive subgroup generated by {x * y : x in xs, y in ys}.
Subset star_product(const SkewBrace& a, const Subset& xs, const Subset& ys);

/// A^(1) = A, A^(k) = A^(k-1) * A, stopping at {0} or at the first
/// repeated term.
std::vector<Subset> right_series(const SkewBrace& a);
/// The m with A^(m) = 0 and A^(m-1) != 0; empty if A is not right nilpotent.
std::optional<std::size_t> right_nilpotency_class(const SkewBrace& a);
bool is_meta_trivial(const SkewBrace& a);

/// The brace induced on a left ideal; s[i] becomes label i.
/// Throws NotLeftIdeal.
SkewBrace sub_brace(const SkewBrace& a, const Subset& s);

/// A / I on the additive cosets of I; cosets are labelled in order of their
/// least element. Throws NotIdeal.
SkewBrace quotient(const SkewBrace& a, const Subset& ideal);

/// Least subset containing s closed under additive generation, additive and
/// multiplicative conjugation, and every lambda_a.
Subset ideal_generated(const SkewBrace& a, const Subset& s);

// ---------------------------------------------------------------------------
// Automorphisms, isomorphism, characteristic simplicity

std::vector<Permutation> brace_automorphisms(const SkewBrace& a);
std::vector<Subset> characteristic_ideals(const SkewBrace& a);
/// False for the zero brace, like is_simple().
bool is_characteristically_simple(const SkewBrace& a);

/// Only the ideals 0 and A, and A != 0.
bool is_simple(const SkewBrace& a);

/// Non-zero ideals containing no smaller non-zero ideal.
std::vector<Subset> minimal_ideals(const SkewBrace& a);

std::optional<Permutation> are_isomorphic_braces(const SkewBrace& a, const SkewBrace& b);

struct PowerDecomposition {
  SkewBrace factor;      // the simple brace S
  std::size_t exponent;  // n with A isomorphic to S^n
  Subset minimal_ideal;  // the ideal of A that S was read from
  Permutation iso;       // A -> S^n
};

/// Succeeds iff A is isomorphic to S^n for a simple brace S induced on one
/// of the minimal ideals of A.
std::optional<PowerDecomposition> decompose_as_power_of_simple(const SkewBrace& a);

}  // namespace skb

#endif  // SKB_BRACE_HPP_
