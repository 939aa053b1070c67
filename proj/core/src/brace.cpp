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

#include "skb/brace.hpp"

#include <algorithm>

#include "skb/group_catalog.hpp"

namespace skb {

SkewBrace validate_brace(const GroupTable& add, const GroupTable& circ) {
  const std::size_t n = add.order();
  if (circ.order() != n) {
    throw Error(ErrorKind::OrderMismatch, "additive and multiplicative orders differ",
                {static_cast<Elem>(n), static_cast<Elem>(circ.order())});
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = circ.op(a, b);
      const Elem lhs_prefix = add.op(ab, add.inv(a));  // a o b - a
      for (Elem c = 0; c < n; ++c) {
        if (circ.op(a, add.op(b, c)) != add.op(lhs_prefix, circ.op(a, c))) {
          throw Error(ErrorKind::CompatibilityFailure, "a o (b + c) != a o b - a + a o c",
                      {a, b, c});
        }
      }
    }
  }
  SkewBrace brace;
  brace.add_ = add;
  brace.circ_ = circ;
  brace.lambda_.reserve(n);
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem> images(n);
    for (Elem b = 0; b < n; ++b) images[b] = add.op(add.inv(a), circ.op(a, b));
    brace.lambda_.emplace_back(std::move(images));
  }
  return brace;
}

SkewBrace brace_from_lambda(const GroupTable& add, std::span<const Permutation> lambda) {
  const std::size_t n = add.order();
  if (lambda.size() != n) throw Error(ErrorKind::InvalidInput, "one lambda map per element");
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) flat[a * n + b] = add.op(a, lambda[a](b));
  }
  return validate_brace(add, group_from_construction(n, std::move(flat)));
}

SkewBrace trivial_brace(const GroupTable& g) { return validate_brace(g, g); }

bool is_trivial(const SkewBrace& a) { return a.additive() == a.multiplicative(); }

SkewBrace direct_product_braces(std::span<const SkewBrace> factors) {
  if (factors.empty()) return trivial_brace(cyclic_group(1));
  GroupTable add = factors[0].additive();
  GroupTable circ = factors[0].multiplicative();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    add = direct_product(add, factors[i].additive());
    circ = direct_product(circ, factors[i].multiplicative());
  }
  return validate_brace(add, circ);
}

SkewBrace sub_brace(const SkewBrace& a, const Subset& s) {
  if (!is_left_ideal(a, s)) throw Error(ErrorKind::NotLeftIdeal, "subset is not a left ideal");
  return validate_brace(induced_subgroup(a.additive(), s), induced_subgroup(a.multiplicative(), s));
}

SkewBrace quotient(const SkewBrace& a, const Subset& ideal) {
  if (!is_ideal(a, ideal)) throw Error(ErrorKind::NotIdeal, "subset is not an ideal");
  const std::size_t n = a.order();
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> coset(n, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const Elem label = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : ideal) coset[a.add(x, i)] = label;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> add(k * k), circ(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      add[i * k + j] = coset[a.add(reps[i], reps[j])];
      circ[i * k + j] = coset[a.circ(reps[i], reps[j])];
    }
  }
  return validate_brace(group_from_construction(k, std::move(add)),
                        group_from_construction(k, std::move(circ)));
}

}  // namespace skb
