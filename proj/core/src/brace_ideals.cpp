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

#include "skb/brace.hpp"

namespace skb {

namespace {

bool lambda_closed(const SkewBrace& a, const Subset& s, const std::vector<char>& mask) {
  for (Elem x = 0; x < a.order(); ++x) {
    const auto& l = a.lambda(x);
    for (Elem y : s) {
      if (!mask[l(y)]) return false;
    }
  }
  return true;
}

bool invariant_under(const Subset& s, const std::vector<char>& mask, const Permutation& p) {
  for (Elem y : s) {
    if (!mask[p(y)]) return false;
  }
  return true;
}

}  // namespace

bool is_left_ideal(const SkewBrace& a, const Subset& s) {
  if (!is_subgroup(a.additive(), s)) return false;
  return lambda_closed(a, s, s.mask());
}

bool is_strong_left_ideal(const SkewBrace& a, const Subset& s) {
  return is_left_ideal(a, s) && is_normal(a.additive(), s);
}

bool is_ideal(const SkewBrace& a, const Subset& s) {
  // A left ideal is a subgroup of (A, o), so is_normal cannot throw here.
  return is_strong_left_ideal(a, s) && is_normal(a.multiplicative(), s);
}

bool is_trivial_subbrace(const SkewBrace& a, const Subset& s) {
  for (Elem x : s) {
    for (Elem y : s) {
      if (a.add(x, y) != a.circ(x, y)) return false;
    }
  }
  return true;
}

IdealReport classify_subset(const SkewBrace& a, const Subset& s,
                            std::span<const Permutation> brace_auts) {
  IdealReport r;
  r.subset = s;
  r.is_subgroup = is_subgroup(a.additive(), s);
  if (!r.is_subgroup) return r;
  const auto mask = s.mask();
  r.is_left_ideal = lambda_closed(a, s, mask);
  r.is_strong_left_ideal = r.is_left_ideal && is_normal(a.additive(), s);
  r.is_ideal = r.is_strong_left_ideal && is_normal(a.multiplicative(), s);
  r.is_trivial_subbrace = is_trivial_subbrace(a, s);
  if (r.is_ideal) {
    r.is_characteristic = std::all_of(brace_auts.begin(), brace_auts.end(),
                                      [&](const Permutation& p) { return invariant_under(s, mask, p); });
  }
  return r;
}

IdealReport classify_subset(const SkewBrace& a, const Subset& s) {
  if (!is_ideal(a, s)) return classify_subset(a, s, {});
  return classify_subset(a, s, brace_automorphisms(a));
}

std::vector<Subset> left_ideals(const SkewBrace& a) {
  auto subs = all_subgroups(a.additive());
  std::erase_if(subs, [&](const Subset& s) { return !lambda_closed(a, s, s.mask()); });
  return subs;
}

std::vector<Subset> strong_left_ideals(const SkewBrace& a) {
  auto subs = left_ideals(a);
  std::erase_if(subs, [&](const Subset& s) { return !is_normal(a.additive(), s); });
  return subs;
}

std::vector<Subset> ideals(const SkewBrace& a) {
  auto subs = strong_left_ideals(a);
  std::erase_if(subs, [&](const Subset& s) { return !is_normal(a.multiplicative(), s); });
  return subs;
}

Subset ker_lambda(const SkewBrace& a) {
  std::vector<Elem> k;
  for (Elem x = 0; x < a.order(); ++x) {
    if (a.lambda(x).is_identity()) k.push_back(x);
  }
  return Subset(a.order(), std::move(k));
}

Subset socle(const SkewBrace& a) { return intersect(ker_lambda(a), center(a.additive())); }

Subset fix(const SkewBrace& a) {
  std::vector<Elem> f;
  for (Elem x = 0; x < a.order(); ++x) {
    bool fixed = true;
    for (Elem b = 0; b < a.order() && fixed; ++b) fixed = a.lambda(b)(x) == x;
    if (fixed) f.push_back(x);
  }
  return Subset(a.order(), std::move(f));
}

Subset star_product(const SkewBrace& a, const Subset& xs, const Subset& ys) {
  std::vector<char> seen(a.order(), 0);
  std::vector<Elem> gens;
  for (Elem x : xs) {
    for (Elem y : ys) {
      const Elem s = a.star(x, y);
      if (!seen[s]) {
        seen[s] = 1;
        gens.push_back(s);
      }
    }
  }
  return subgroup_generated(a.additive(), gens);
}

std::vector<Subset> right_series(const SkewBrace& a) {
  const Subset all = Subset::full(a.order());
  std::vector<Subset> series{all};
  while (!series.back().is_zero()) {
    Subset next = star_product(a, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> right_nilpotency_class(const SkewBrace& a) {
  const auto series = right_series(a);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size();
}

bool is_meta_trivial(const SkewBrace& a) {
  const auto all = Subset::full(a.order());
  return is_trivial_subbrace(a, star_product(a, all, all));
}

Subset ideal_generated(const SkewBrace& a, const Subset& s) {
  const std::size_t n = a.order();
  Subset current = subgroup_generated(a.additive(), s);
  while (true) {
    std::vector<char> mask = current.mask();
    std::vector<Elem> gens(current.begin(), current.end());
    auto push = [&](Elem y) {
      if (!mask[y]) {
        mask[y] = 1;
        gens.push_back(y);
      }
    };
    for (Elem x : current) {
      for (Elem b = 0; b < n; ++b) {
        push(a.sub(a.add(b, x), b));                                  // b + x - b
        push(a.circ(a.circ(b, x), a.circ_inverse(b)));                // b o x o b'
        push(a.lambda(b)(x));                                         // lambda_b(x)
      }
    }
    Subset next = subgroup_generated(a.additive(), gens);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace skb
