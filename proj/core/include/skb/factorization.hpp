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

#ifndef SKB_FACTORIZATION_HPP_
#define SKB_FACTORIZATION_HPP_

#include <optional>
#include <vector>

#include "skb/brace.hpp"
#include "skb/report.hpp"

namespace skb {

/// {x + y : x in xs, y in ys} as a raw set (no closure).
Subset sum_set(const SkewBrace& a, const Subset& xs, const Subset& ys);

/// A = B + C through left ideals B and C.
struct Factorization {
  Subset b;
  Subset c;
  bool b_strong = false;
  bool c_strong = false;
  bool b_trivial = false;
  bool c_trivial = false;
  bool sum_is_all = false;

  bool trivial_trivial() const { return b_trivial && c_trivial; }
  bool proper() const { return !b.is_full() && !c.is_full(); }
};

/// Computes the flags. Throws NotLeftIdeal if a factor is not a left ideal
/// and PreconditionViolated if B + C != A.
Factorization make_factorization(const SkewBrace& a, const Subset& b, const Subset& c);

struct FactorizationQuery {
  bool strong_b = false;
  bool strong_c = false;
  bool trivial_b = false;
  bool trivial_c = false;
  /// Admit pairs with B = A or C = A.
  bool allow_improper = false;
};

/// Every unordered pair {B, C} of left ideals with B + C = A meeting the
/// query, reported once and oriented so that B carries the B-side flags.
std::vector<Factorization> find_factorizations(const SkewBrace& a,
                                               const FactorizationQuery& query = {});

/// B + C = C + B = B o C = C o B = A as raw sets.
VerificationReport verify_factorization_sums(const SkewBrace& a, const Factorization& f);

/// For trivial factors, over all b, beta in B and c, gamma in C:
///   lambda_{beta o gamma} = lambda_{gamma o beta};
///   (c + b) o beta - beta = c + b + c * beta;
///   b o c o b' o c' = b o c - c o b = b + lambda_b(c) - lambda_c(b) - c,
///   and that element lies in Ker(lambda).
/// Throws PreconditionViolated unless both factors are trivial.
VerificationReport verify_trivial_factor_identities(const SkewBrace& a, const Factorization& f);

/// For trivial factors: B*C and C*B are strong left ideals and trivial
/// sub-braces, A^(2) = B*C + C*B = C*B + B*C, and A^(2) is meta-trivial as a
/// brace. With both factors strong additionally: right class <= 3, A is
/// meta-trivial, and (for proper factors of a non-zero A) A is not simple.
/// Throws PreconditionViolated unless both factors are trivial.
VerificationReport verify_ito(const SkewBrace& a, const Factorization& f);

/// A non-zero ideal I inside B or C with I in Ker(lambda). Requires trivial
/// factors and B strong (PreconditionViolated otherwise). Empty only if no
/// such ideal exists.
std::optional<Subset> find_trivializing_ideal(const SkewBrace& a, const Factorization& f);

/// Right class <= 4 and B*C is an ideal. Same preconditions as
/// find_trivializing_ideal.
VerificationReport check_class_four(const SkewBrace& a, const Factorization& f);

/// I = (I n B) + (I n C). Throws NotLeftIdeal.
bool is_factorized_left_ideal(const SkewBrace& a, const Factorization& f, const Subset& i);

/// Soc(A) is factorized. Requires a left brace (NotALeftBrace) and trivial
/// factors (PreconditionViolated).
bool check_soc_factorized(const SkewBrace& a, const Factorization& f);

/// A group G = B + C with B n C = 0.
struct ExactFactorization {
  GroupTable g;
  Subset b;
  Subset c;
};

/// Every ordered pair (B, C) of subgroups giving an exact factorization,
/// including the pairs with a zero factor.
std::vector<ExactFactorization> exact_factorizations(const GroupTable& g);

/// The brace on G with x o y = b + y + c, where x = b + c. Throws NotExact.
SkewBrace exact_factorization_brace(const ExactFactorization& ef);

/// For A built from ef: C is a left ideal; (C, +) normal implies C is an
/// ideal; (B, +) normal implies B is an ideal; both normal with (C, +)
/// abelian implies right class <= 3.
VerificationReport check_exact_factorization_props(const SkewBrace& a,
                                                   const ExactFactorization& ef);

}  // namespace skb

#endif  // SKB_FACTORIZATION_HPP_
