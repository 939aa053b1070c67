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

#include "skb/factorization.hpp"

#include <algorithm>
#include <string>

#include "skb/group_catalog.hpp"

namespace skb {

namespace {

using Witness = std::optional<std::vector<Elem>>;

// First (x, y) in s with x + y outside s, then the first (a, x) with
// lambda_a(x) outside s.
Witness left_ideal_witness(const SkewBrace& a, const Subset& s) {
  const auto mask = s.mask();
  for (Elem x : s) {
    for (Elem y : s) {
      if (!mask[a.add(x, y)]) return std::vector<Elem>{x, y};
    }
  }
  for (Elem b = 0; b < a.order(); ++b) {
    for (Elem x : s) {
      if (!mask[a.lambda(b)(x)]) return std::vector<Elem>{b, x};
    }
  }
  return std::nullopt;
}

Witness normal_witness(const GroupTable& g, const Subset& s) {
  const auto mask = s.mask();
  for (Elem b = 0; b < g.order(); ++b) {
    for (Elem x : s) {
      if (!mask[g.op(g.op(b, x), g.inv(b))]) return std::vector<Elem>{b, x};
    }
  }
  return std::nullopt;
}

Witness strong_left_ideal_witness(const SkewBrace& a, const Subset& s) {
  if (auto w = left_ideal_witness(a, s)) return w;
  return normal_witness(a.additive(), s);
}

Witness ideal_witness(const SkewBrace& a, const Subset& s) {
  if (auto w = strong_left_ideal_witness(a, s)) return w;
  return normal_witness(a.multiplicative(), s);
}

Witness trivial_witness(const SkewBrace& a, const Subset& s) {
  for (Elem x : s) {
    for (Elem y : s) {
      if (a.add(x, y) != a.circ(x, y)) return std::vector<Elem>{x, y};
    }
  }
  return std::nullopt;
}

void add_witness_check(VerificationReport& r, std::string name, const Witness& w) {
  r.add(std::move(name), !w.has_value(), w.value_or(std::vector<Elem>{}));
}

Subset circ_product_set(const SkewBrace& a, const Subset& xs, const Subset& ys) {
  std::vector<Elem> out;
  for (Elem x : xs) {
    for (Elem y : ys) out.push_back(a.circ(x, y));
  }
  return Subset(a.order(), std::move(out));
}

void require_trivial_factors(const Factorization& f) {
  if (!f.trivial_trivial()) {
    throw Error(ErrorKind::PreconditionViolated, "both factors must be trivial sub-braces");
  }
}

void require_strong_b(const Factorization& f) {
  require_trivial_factors(f);
  if (!f.b_strong) throw Error(ErrorKind::PreconditionViolated, "B must be a strong left ideal");
}

std::string class_detail(std::optional<std::size_t> cls) {
  return cls ? "right class " + std::to_string(*cls) : "not right nilpotent";
}

Elem class_witness(std::optional<std::size_t> cls) { return cls ? static_cast<Elem>(*cls) : 0; }

}  // namespace

Subset sum_set(const SkewBrace& a, const Subset& xs, const Subset& ys) {
  std::vector<Elem> out;
  out.reserve(xs.size() * ys.size());
  for (Elem x : xs) {
    for (Elem y : ys) out.push_back(a.add(x, y));
  }
  return Subset(a.order(), std::move(out));
}

Factorization make_factorization(const SkewBrace& a, const Subset& b, const Subset& c) {
  if (!is_left_ideal(a, b) || !is_left_ideal(a, c)) {
    throw Error(ErrorKind::NotLeftIdeal, "factorization factors must be left ideals");
  }
  Factorization f;
  f.b = b;
  f.c = c;
  f.sum_is_all = sum_set(a, b, c).is_full();
  if (!f.sum_is_all) throw Error(ErrorKind::PreconditionViolated, "B + C is not all of A");
  f.b_strong = is_normal(a.additive(), b);
  f.c_strong = is_normal(a.additive(), c);
  f.b_trivial = is_trivial_subbrace(a, b);
  f.c_trivial = is_trivial_subbrace(a, c);
  return f;
}

std::vector<Factorization> find_factorizations(const SkewBrace& a,
                                               const FactorizationQuery& query) {
  struct Info {
    Subset s;
    bool strong, trivial;
  };
  std::vector<Info> lis;
  for (auto& s : left_ideals(a)) {
    const bool strong = is_normal(a.additive(), s);
    const bool trivial = is_trivial_subbrace(a, s);
    lis.push_back({std::move(s), strong, trivial});
  }
  auto meets = [&](const Info& b, const Info& c) {
    return (!query.strong_b || b.strong) && (!query.strong_c || c.strong) &&
           (!query.trivial_b || b.trivial) && (!query.trivial_c || c.trivial);
  };
  std::vector<Factorization> result;
  for (std::size_t i = 0; i < lis.size(); ++i) {
    for (std::size_t j = i + 1; j < lis.size(); ++j) {
      const Info* b = &lis[i];
      const Info* c = &lis[j];
      if (!query.allow_improper && (b->s.is_full() || c->s.is_full())) continue;
      if (b->s.size() * c->s.size() < a.order()) continue;
      if (!meets(*b, *c)) {
        std::swap(b, c);
        if (!meets(*b, *c)) continue;
      }
      if (!sum_set(a, b->s, c->s).is_full()) continue;
      result.push_back({b->s, c->s, b->strong, c->strong, b->trivial, c->trivial, true});
    }
  }
  if (query.allow_improper) {
    // The diagonal pair (A, A) is the only factorization with B = C.
    for (const auto& info : lis) {
      if (info.s.is_full() && meets(info, info)) {
        result.push_back({info.s, info.s, info.strong, info.strong, info.trivial, info.trivial,
                          true});
      }
    }
  }
  return result;
}

VerificationReport verify_factorization_sums(const SkewBrace& a, const Factorization& f) {
  VerificationReport r;
  r.add("B + C = A", sum_set(a, f.b, f.c).is_full());
  r.add("C + B = A", sum_set(a, f.c, f.b).is_full());
  r.add("B o C = A", circ_product_set(a, f.b, f.c).is_full());
  r.add("C o B = A", circ_product_set(a, f.c, f.b).is_full());
  return r;
}

VerificationReport verify_trivial_factor_identities(const SkewBrace& a, const Factorization& f) {
  require_trivial_factors(f);
  VerificationReport r;

  Witness w1;
  for (Elem beta : f.b) {
    for (Elem gamma : f.c) {
      if (!w1 && a.lambda(a.circ(beta, gamma)) != a.lambda(a.circ(gamma, beta))) {
        w1 = std::vector<Elem>{beta, gamma};
      }
    }
  }
  add_witness_check(r, "lambda_{beta o gamma} = lambda_{gamma o beta}", w1);

  Witness w2;
  for (Elem c : f.c) {
    for (Elem b : f.b) {
      for (Elem beta : f.b) {
        const Elem lhs = a.sub(a.circ(a.add(c, b), beta), beta);
        const Elem rhs = a.add(a.add(c, b), a.star(c, beta));
        if (!w2 && lhs != rhs) w2 = std::vector<Elem>{c, b, beta};
      }
    }
  }
  add_witness_check(r, "(c + b) o beta - beta = c + b + c * beta", w2);

  Witness w3, w4;
  for (Elem b : f.b) {
    for (Elem c : f.c) {
      const Elem commutator =
          a.circ(a.circ(a.circ(b, c), a.circ_inverse(b)), a.circ_inverse(c));
      const Elem difference = a.sub(a.circ(b, c), a.circ(c, b));
      const Elem expanded =
          a.sub(a.sub(a.add(b, a.lambda(b)(c)), a.lambda(c)(b)), c);
      if (!w3 && (commutator != difference || difference != expanded)) {
        w3 = std::vector<Elem>{b, c};
      }
      if (!w4 && !a.lambda(commutator).is_identity()) w4 = std::vector<Elem>{b, c};
    }
  }
  add_witness_check(r, "b o c o b' o c' = b o c - c o b = b + lambda_b(c) - lambda_c(b) - c",
                    w3);
  add_witness_check(r, "b o c o b' o c' in Ker(lambda)", w4);
  return r;
}

VerificationReport verify_ito(const SkewBrace& a, const Factorization& f) {
  require_trivial_factors(f);
  VerificationReport r;
  const Subset all = Subset::full(a.order());
  const Subset bc = star_product(a, f.b, f.c);
  const Subset cb = star_product(a, f.c, f.b);
  const Subset a2 = star_product(a, all, all);

  add_witness_check(r, "B*C is a strong left ideal", strong_left_ideal_witness(a, bc));
  add_witness_check(r, "C*B is a strong left ideal", strong_left_ideal_witness(a, cb));
  add_witness_check(r, "B*C is a trivial sub-brace", trivial_witness(a, bc));
  add_witness_check(r, "C*B is a trivial sub-brace", trivial_witness(a, cb));
  r.add("A^(2) = B*C + C*B", sum_set(a, bc, cb) == a2);
  r.add("A^(2) = C*B + B*C", sum_set(a, cb, bc) == a2);

  bool a2_meta_trivial = false;
  if (is_left_ideal(a, a2)) a2_meta_trivial = is_meta_trivial(sub_brace(a, a2));
  r.add("A^(2) is meta-trivial", a2_meta_trivial);

  if (f.b_strong && f.c_strong) {
    const auto cls = right_nilpotency_class(a);
    r.add("right class <= 3", cls && *cls <= 3, {class_witness(cls)}, class_detail(cls));
    r.add("A is meta-trivial", is_meta_trivial(a));
    if (f.proper() && a.order() > 1) r.add("A is not simple", !is_simple(a));
  }
  return r;
}

std::optional<Subset> find_trivializing_ideal(const SkewBrace& a, const Factorization& f) {
  require_strong_b(f);
  const Subset kernel = ker_lambda(a);
  for (const auto& i : ideals(a)) {
    if (i.is_zero() || !i.is_subset_of(kernel)) continue;
    if (i.is_subset_of(f.b) || i.is_subset_of(f.c)) return i;
  }
  return std::nullopt;
}

VerificationReport check_class_four(const SkewBrace& a, const Factorization& f) {
  require_strong_b(f);
  VerificationReport r;
  const auto cls = right_nilpotency_class(a);
  r.add("right class <= 4", cls && *cls <= 4, {class_witness(cls)}, class_detail(cls));
  add_witness_check(r, "B*C is an ideal", ideal_witness(a, star_product(a, f.b, f.c)));
  return r;
}

bool is_factorized_left_ideal(const SkewBrace& a, const Factorization& f, const Subset& i) {
  if (!is_left_ideal(a, i)) throw Error(ErrorKind::NotLeftIdeal, "subset is not a left ideal");
  return sum_set(a, intersect(i, f.b), intersect(i, f.c)) == i;
}

bool check_soc_factorized(const SkewBrace& a, const Factorization& f) {
  if (!a.is_left_brace()) {
    throw Error(ErrorKind::NotALeftBrace, "the additive group is not abelian");
  }
  require_trivial_factors(f);
  return is_factorized_left_ideal(a, f, socle(a));
}

std::vector<ExactFactorization> exact_factorizations(const GroupTable& g) {
  const auto subs = all_subgroups(g);
  std::vector<ExactFactorization> result;
  for (const auto& b : subs) {
    for (const auto& c : subs) {
      if (b.size() * c.size() != g.order()) continue;
      if (!intersect(b, c).is_zero()) continue;
      result.push_back({g, b, c});
    }
  }
  return result;
}

SkewBrace exact_factorization_brace(const ExactFactorization& ef) {
  const GroupTable& g = ef.g;
  const std::size_t n = g.order();
  if (!is_subgroup(g, ef.b) || !is_subgroup(g, ef.c)) {
    throw Error(ErrorKind::NotExact, "factors must be subgroups");
  }
  if (!intersect(ef.b, ef.c).is_zero()) throw Error(ErrorKind::NotExact, "B n C != 0");
  if (ef.b.size() * ef.c.size() != n) throw Error(ErrorKind::NotExact, "B + C != G");

  std::vector<std::pair<Elem, Elem>> parts(n);
  for (Elem b : ef.b) {
    for (Elem c : ef.c) parts[g.op(b, c)] = {b, c};
  }
  std::vector<Elem> flat(n * n);
  for (Elem x = 0; x < n; ++x) {
    const auto [b, c] = parts[x];
    for (Elem y = 0; y < n; ++y) flat[x * n + y] = g.op(g.op(b, y), c);
  }
  SkewBrace brace = validate_brace(g, group_from_construction(n, std::move(flat)));
  const GroupTable product =
      direct_product(induced_subgroup(g, ef.b), induced_subgroup(g, ef.c));
  if (!are_isomorphic(brace.multiplicative(), product)) {
    throw Error(ErrorKind::IllDefined, "multiplicative group is not isomorphic to B x C");
  }
  return brace;
}

VerificationReport check_exact_factorization_props(const SkewBrace& a,
                                                   const ExactFactorization& ef) {
  VerificationReport r;
  add_witness_check(r, "C is a left ideal", left_ideal_witness(a, ef.c));
  const bool c_normal = is_normal(a.additive(), ef.c);
  const bool b_normal = is_normal(a.additive(), ef.b);
  if (c_normal) add_witness_check(r, "(C,+) normal => C is an ideal", ideal_witness(a, ef.c));
  if (b_normal) add_witness_check(r, "(B,+) normal => B is an ideal", ideal_witness(a, ef.b));
  if (c_normal && b_normal && induced_subgroup(a.additive(), ef.c).is_abelian()) {
    const auto cls = right_nilpotency_class(a);
    r.add("both normal, (C,+) abelian => right class <= 3", cls && *cls <= 3,
          {class_witness(cls)}, class_detail(cls));
  }
  return r;
}

}  // namespace skb
