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

#ifndef SKB_YBE_HPP_
#define SKB_YBE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "skb/brace.hpp"
#include "skb/group_catalog.hpp"

namespace skb {

/// A set-theoretic solution r(x, y) = (sigma_x(y), tau_y(x)) of the
/// Yang-Baxter equation on {0, ..., n-1}.
///
/// Storage convention (also the file convention): sigma[x][y] = sigma_x(y)
/// and tau[y][x] = tau_y(x). Note the transposition in the tau index.
class Solution {
 public:
  Solution() = default;

  std::size_t size() const noexcept { return size_; }
  Elem sigma(Elem x, Elem y) const { return sigma_[x * size_ + y]; }
  Elem tau(Elem y, Elem x) const { return tau_[y * size_ + x]; }
  std::pair<Elem, Elem> r(Elem x, Elem y) const { return {sigma(x, y), tau(y, x)}; }

  Matrix sigma_matrix() const;
  Matrix tau_matrix() const;

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  friend Solution validate_solution(const Matrix&, const Matrix&, bool);

  std::size_t size_ = 0;
  std::vector<Elem> sigma_;
  std::vector<Elem> tau_;
};

/// Checks that r is a bijection of X x X and satisfies the braid relation
/// on all triples. With require_nondegenerate, a non-bijective sigma or tau
/// row is also rejected.
/// Errors: InvalidInput, NotBijectiveR, BraidFailure (witness x y z).
Solution validate_solution(const Matrix& sigma, const Matrix& tau,
                           bool require_nondegenerate = false);

bool is_involutive(const Solution& s);
bool is_nondegenerate(const Solution& s);

/// r_A(a, b) = (lambda_a(b), lambda_a(b)' o a o b).
Solution solution_from_brace(const SkewBrace& a);

/// The flip r(x, y) = (y, x) on n points.
Solution flip_solution(std::size_t n);

struct Decomposition {
  Subset y;
  Subset z;
};

/// r(Y x Y) in Y x Y, r(Z x Z) in Z x Z, r(Y x Z) = Z x Y and
/// r(Z x Y) = Y x Z, for Z the complement of Y.
bool is_decomposition(const Solution& s, const Subset& y);

/// The partition (I, A \ I) of (A, r_A), verified against the definition.
/// Errors: NotProperStrongLeftIdeal; DecompositionFailure if the check fails.
Decomposition decomposition_from_strong_left_ideal(const SkewBrace& a, const Subset& ideal);

/// A verified decomposition built from the orbits of <sigma_x, tau_x>, or
/// empty when that group is transitive.
std::optional<Decomposition> is_decomposable(const Solution& s);

struct Retraction {
  Solution solution;
  /// class_of[x] is the label of the class of x; classes are labelled in
  /// increasing order of their least element.
  std::vector<Elem> class_of;
};

/// Quotient by x ~ y iff sigma_x = sigma_y.
/// Errors: NotInvolutive, NotNondegenerate, IllDefined.
Retraction retract(const Solution& s);
Solution retraction(const Solution& s);

struct MultipermutationVerdict {
  enum class Kind { Level, Stalled, CapExceeded };
  Kind kind;
  /// Level m, Stalled at step k (Ret^k already irretractable), or the
  /// number of steps taken before giving up.
  std::size_t value;

  friend bool operator==(const MultipermutationVerdict&, const MultipermutationVerdict&) = default;
};

/// Iterates the retraction. The cap defaults to the size of s.
/// Requires size >= 2 (PreconditionViolated) plus the retraction
/// preconditions.
MultipermutationVerdict multipermutation_level(const Solution& s,
                                               std::optional<std::size_t> cap = std::nullopt);

/// The group generated by the sigma_x. Errors: NotNondegenerate, GroupTooLarge.
PermutationGroup permutation_group_of_solution(const Solution& s,
                                               std::size_t max_order = 10080);

}  // namespace skb

#endif  // SKB_YBE_HPP_
