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

#include "skb/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "skb/factorization.hpp"
#include "skb/group_catalog.hpp"

namespace skb {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("SKB_ORDER_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 8;
}

std::string_view to_string(Provenance p) {
  return p == Provenance::Holomorph ? "holomorph" : "brute-force-oracle";
}

namespace {

void check_order(std::size_t n, const EnumerationOptions& options) {
  if (n <= options.order_cap && n <= kMaxEnumerationOrder) return;
  if (options.allow_large && n <= kMaxEnumerationOrder) {
    std::cerr << "warning: enumerating skew braces of order " << n << " (above the cap of "
              << options.order_cap << "); this may take minutes\n";
    return;
  }
  throw Error(ErrorKind::OrderCapExceeded, "order exceeds the enumeration cap",
              {static_cast<Elem>(n), static_cast<Elem>(options.order_cap)});
}

// Regular subgroups R of Hol(A) in lambda form: R contains exactly one
// (a, phi_a) per point a, and closure under the holomorph product reads
// phi_{a + phi_a(b)} = phi_a phi_b.
class RegularSubgroupSearch {
 public:
  RegularSubgroupSearch(const GroupTable& add, std::vector<Permutation> auts)
      : add_(add), auts_(std::move(auts)), n_(add.order()), m_(auts_.size()) {
    compose_.resize(m_ * m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) compose_[i * m_ + j] = index_of(auts_[i] * auts_[j]);
    }
  }

  const std::vector<Permutation>& automorphisms() const { return auts_; }

  /// Restricts the first branching point to one automorphism per orbit of
  /// its stabilizer acting by conjugation. Every Aut(A)-orbit of regular
  /// subgroups keeps at least one member.
  void reduce_first_level() {
    first_level_.assign(m_, 1);
    if (n_ < 2) return;
    std::vector<std::size_t> stabilizer;
    for (std::size_t i = 0; i < m_; ++i) {
      if (auts_[i](1) == 1) stabilizer.push_back(i);
    }
    std::vector<std::size_t> inverse(m_);
    for (std::size_t i = 0; i < m_; ++i) inverse[i] = index_of(auts_[i].inverse());
    for (std::size_t phi = 0; phi < m_; ++phi) {
      for (std::size_t psi : stabilizer) {
        const std::size_t conj = compose_[compose_[psi * m_ + phi] * m_ + inverse[psi]];
        if (conj < phi) {
          first_level_[phi] = 0;
          break;
        }
      }
    }
  }

  /// visit(lambda) receives the automorphism index of every point.
  void run(const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> lam(n_, kUnset);
    lam[0] = 0;  // identity is first in the sorted automorphism list
    std::vector<Elem> assigned{0};
    recurse(lam, assigned, true, visit);
  }

 private:
  static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

  std::size_t index_of(const Permutation& p) const {
    return static_cast<std::size_t>(std::lower_bound(auts_.begin(), auts_.end(), p) -
                                    auts_.begin());
  }

  // Closes the assigned set under the product after `fresh` was added.
  bool propagate(std::vector<std::size_t>& lam, std::vector<Elem>& assigned,
                 std::size_t fresh_from) const {
    for (std::size_t q = fresh_from; q < assigned.size(); ++q) {
      const Elem x = assigned[q];
      for (std::size_t k = 0; k <= q; ++k) {
        const Elem y = assigned[k];
        for (int side = 0; side < 2; ++side) {
          const Elem u = side ? y : x;
          const Elem v = side ? x : y;
          const Elem c = add_.op(u, auts_[lam[u]](v));
          const std::size_t phi = compose_[lam[u] * m_ + lam[v]];
          if (lam[c] == kUnset) {
            lam[c] = phi;
            assigned.push_back(c);
          } else if (lam[c] != phi) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void recurse(std::vector<std::size_t>& lam, std::vector<Elem>& assigned, bool first,
               const std::function<void(const std::vector<std::size_t>&)>& visit) const {
    if (assigned.size() == n_) {
      visit(lam);
      return;
    }
    Elem point = 0;
    while (lam[point] != kUnset) ++point;
    for (std::size_t phi = 0; phi < m_; ++phi) {
      if (first && !first_level_.empty() && !first_level_[phi]) continue;
      std::vector<std::size_t> lam2 = lam;
      std::vector<Elem> assigned2 = assigned;
      lam2[point] = phi;
      assigned2.push_back(point);
      if (!propagate(lam2, assigned2, assigned.size())) continue;
      recurse(lam2, assigned2, false, visit);
    }
  }

  const GroupTable& add_;
  std::vector<Permutation> auts_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> compose_;
  std::vector<char> first_level_;
};

std::vector<Elem> relabel_table(std::span<const Elem> table, std::size_t n, const Permutation& p) {
  std::vector<Elem> out(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) out[p(a) * n + p(b)] = p(table[a * n + b]);
  }
  return out;
}

std::vector<Elem> canonical_table(std::span<const Elem> table, std::size_t n,
                                  const std::vector<Permutation>& auts) {
  std::vector<Elem> best;
  for (const auto& p : auts) {
    auto t = relabel_table(table, n, p);
    if (best.empty() || t < best) best = std::move(t);
  }
  return best;
}

// Key for Aut(A)-orbits of lambda maps: least relabelled index array.
std::vector<std::size_t> canonical_lambda_key(const std::vector<std::size_t>& lam,
                                              const std::vector<Permutation>& auts,
                                              const std::vector<std::size_t>& conj,
                                              std::size_t m) {
  const std::size_t n = lam.size();
  std::vector<std::size_t> best, key(n);
  for (std::size_t psi = 0; psi < m; ++psi) {
    for (Elem a = 0; a < n; ++a) key[auts[psi](a)] = conj[psi * m + lam[a]];
    if (best.empty() || key < best) best = key;
  }
  return best;
}

CatalogEntry make_entry(SkewBrace brace) {
  CatalogEntry e;
  e.add_name = identify_group(brace.additive());
  e.mult_name = identify_group(brace.multiplicative());
  e.brace = std::move(brace);
  return e;
}

}  // namespace

std::vector<Elem> canonical_circ_table(const SkewBrace& brace,
                                       const std::vector<Permutation>& add_automorphisms) {
  return canonical_table(brace.multiplicative().flat(), brace.order(), add_automorphisms);
}

std::size_t count_regular_subgroups(const GroupTable& add) {
  RegularSubgroupSearch search(add, automorphisms(add));
  std::size_t count = 0;
  search.run([&](const std::vector<std::size_t>&) { ++count; });
  return count;
}

std::vector<SkewBrace> skew_braces_on(const GroupTable& add, const EnumerationOptions& options) {
  const std::size_t n = add.order();
  check_order(n, options);
  RegularSubgroupSearch search(add, automorphisms(add));
  search.reduce_first_level();
  const auto& auts = search.automorphisms();
  const std::size_t m = auts.size();

  std::vector<std::size_t> inverse(m), conj(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    inverse[i] = static_cast<std::size_t>(
        std::lower_bound(auts.begin(), auts.end(), auts[i].inverse()) - auts.begin());
  }
  for (std::size_t psi = 0; psi < m; ++psi) {
    for (std::size_t phi = 0; phi < m; ++phi) {
      const Permutation c = auts[psi] * auts[phi] * auts[inverse[psi]];
      conj[psi * m + phi] = static_cast<std::size_t>(
          std::lower_bound(auts.begin(), auts.end(), c) - auts.begin());
    }
  }

  std::set<std::vector<std::size_t>> seen;
  std::map<std::vector<Elem>, SkewBrace> by_table;
  search.run([&](const std::vector<std::size_t>& lam) {
    if (!seen.insert(canonical_lambda_key(lam, auts, conj, m)).second) return;
    std::vector<Permutation> maps;
    maps.reserve(n);
    for (std::size_t idx : lam) maps.push_back(auts[idx]);
    const SkewBrace brace = brace_from_lambda(add, maps);
    auto table = canonical_circ_table(brace, auts);
    if (by_table.count(table)) return;
    SkewBrace canonical = validate_brace(add, group_from_construction(n, table));
    by_table.emplace(std::move(table), std::move(canonical));
  });

  std::vector<SkewBrace> result;
  result.reserve(by_table.size());
  for (auto& [table, brace] : by_table) result.push_back(std::move(brace));
  return result;
}

BraceCatalog braces_of_order(std::size_t n, const EnumerationOptions& options) {
  check_order(n, options);
  EnumerationOptions inner = options;
  inner.order_cap = std::max(options.order_cap, n);
  BraceCatalog catalog;
  catalog.order = n;
  catalog.provenance = Provenance::Holomorph;
  for (const auto& g : group_catalog(n)) {
    for (auto& brace : skew_braces_on(g.table, inner)) {
      CatalogEntry e;
      e.add_name = g.name;
      e.mult_name = identify_group(brace.multiplicative());
      e.brace = std::move(brace);
      catalog.entries.push_back(std::move(e));
    }
  }
  return catalog;
}

BraceCatalog brute_force_oracle(std::size_t n) {
  if (n > 6) {
    throw Error(ErrorKind::OrderCapExceeded, "the brute-force oracle covers orders <= 6",
                {static_cast<Elem>(n), 6});
  }
  BraceCatalog catalog;
  catalog.order = n;
  catalog.provenance = Provenance::BruteForceOracle;

  for (const auto& named : group_catalog(n)) {
    const GroupTable& g = named.table;
    const auto gens = generating_set(g);

    // Candidate rows x -> a o x: a o 0 = a, and a o (x + s) = a o x - a + a o s
    // for every generator s, starting from chosen values of a o s.
    std::vector<std::vector<std::vector<Elem>>> rows(n);
    rows[0].push_back([&] {
      std::vector<Elem> id(n);
      for (Elem x = 0; x < n; ++x) id[x] = x;
      return id;
    }());
    for (Elem a = 1; a < n; ++a) {
      std::vector<Elem> choice(gens.size(), 0);
      while (true) {
        std::vector<Elem> row(n, static_cast<Elem>(n));
        row[0] = a;
        std::vector<Elem> queue{0};
        bool ok = true;
        for (std::size_t q = 0; q < queue.size() && ok; ++q) {
          const Elem x = queue[q];
          for (std::size_t i = 0; i < gens.size() && ok; ++i) {
            const Elem y = g.op(x, gens[i]);
            const Elem value = g.op(g.op(row[x], g.inv(a)), choice[i]);
            if (row[y] == n) {
              row[y] = value;
              queue.push_back(y);
            } else if (row[y] != value) {
              ok = false;
            }
          }
        }
        if (ok) {
          std::vector<char> seen(n, 0);
          for (Elem v : row) {
            if (seen[v]) {
              ok = false;
              break;
            }
            seen[v] = 1;
          }
        }
        if (ok) rows[a].push_back(row);
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
        if (k == choice.size()) break;
      }
    }

    std::vector<std::vector<Elem>> table(n);
    std::function<void(Elem)> fill = [&](Elem a) {
      if (a == n) {
        Matrix circ(table.begin(), table.end());
        try {
          GroupTable mult = validate_group(circ);
          SkewBrace brace = validate_brace(g, mult);
          for (const auto& e : catalog.entries) {
            if (are_isomorphic_braces(e.brace, brace)) return;
          }
          catalog.entries.push_back(make_entry(std::move(brace)));
        } catch (const Error&) {
          // not a group, or not compatible
        }
        return;
      }
      for (const auto& row : rows[a]) {
        table[a] = row;
        // Associativity on the rows fixed so far.
        bool ok = true;
        for (Elem x = 0; x <= a && ok; ++x) {
          for (Elem y = 0; y <= a && ok; ++y) {
            const Elem xy = table[x][y];
            if (xy > a) continue;
            for (Elem z = 0; z < n && ok; ++z) ok = table[xy][z] == table[x][table[y][z]];
          }
        }
        if (ok) fill(a + 1);
      }
    };
    table[0] = rows[0][0];
    fill(1);
  }
  return catalog;
}

bool catalogs_match(const BraceCatalog& a, const BraceCatalog& b) {
  if (a.entries.size() != b.entries.size()) return false;
  std::vector<char> used(b.entries.size(), 0);
  for (const auto& e : a.entries) {
    bool matched = false;
    for (std::size_t j = 0; j < b.entries.size() && !matched; ++j) {
      if (!used[j] && are_isomorphic_braces(e.brace, b.entries[j].brace)) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<CatalogEntry> catalog_query(const BraceCatalog& catalog, std::string_view predicates) {
  using Pred = std::function<bool(const CatalogEntry&)>;
  std::vector<Pred> preds;
  auto has_tt_factorization = [](const SkewBrace& a) {
    FactorizationQuery q;
    q.trivial_b = q.trivial_c = true;
    return !find_factorizations(a, q).empty();
  };

  std::stringstream in{std::string(predicates)};
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(' '));
    token.erase(token.find_last_not_of(' ') + 1);
    if (token.empty()) continue;
    const auto eq = token.find('=');
    const std::string key = token.substr(0, eq);
    const std::string value = eq == std::string::npos ? "" : token.substr(eq + 1);
    if (key == "add" && !value.empty()) {
      preds.push_back([value](const CatalogEntry& e) { return e.add_name == value; });
    } else if (key == "mult" && !value.empty()) {
      preds.push_back([value](const CatalogEntry& e) { return e.mult_name == value; });
    } else if (token == "left-brace") {
      preds.push_back([](const CatalogEntry& e) { return e.brace.is_left_brace(); });
    } else if (token == "trivial") {
      preds.push_back([](const CatalogEntry& e) { return is_trivial(e.brace); });
    } else if (token == "non-trivial") {
      preds.push_back([](const CatalogEntry& e) { return !is_trivial(e.brace); });
    } else if (token == "simple") {
      preds.push_back([](const CatalogEntry& e) { return is_simple(e.brace); });
    } else if (token == "not-simple") {
      preds.push_back([](const CatalogEntry& e) { return !is_simple(e.brace); });
    } else if (key == "right-class" && !value.empty()) {
      const std::size_t k = std::stoul(value);
      preds.push_back([k](const CatalogEntry& e) {
        const auto cls = right_nilpotency_class(e.brace);
        return cls && *cls == k;
      });
    } else if (token == "right-nilpotent") {
      preds.push_back([](const CatalogEntry& e) { return right_nilpotency_class(e.brace).has_value(); });
    } else if (token == "not-right-nilpotent") {
      preds.push_back([](const CatalogEntry& e) { return !right_nilpotency_class(e.brace); });
    } else if (token == "trivial-trivial-factorization") {
      preds.push_back([=](const CatalogEntry& e) { return has_tt_factorization(e.brace); });
    } else if (token == "no-trivial-trivial-factorization") {
      preds.push_back([=](const CatalogEntry& e) { return !has_tt_factorization(e.brace); });
    } else if (token == "charsimple") {
      preds.push_back([](const CatalogEntry& e) { return is_characteristically_simple(e.brace); });
    } else if (token == "not-charsimple") {
      preds.push_back([](const CatalogEntry& e) { return !is_characteristically_simple(e.brace); });
    } else {
      throw Error(ErrorKind::UnknownPredicate, "unknown catalog predicate '" + token + "'");
    }
  }
  std::vector<CatalogEntry> result;
  for (const auto& e : catalog.entries) {
    if (std::all_of(preds.begin(), preds.end(), [&](const Pred& p) { return p(e); })) {
      result.push_back(e);
    }
  }
  return result;
}

}  // namespace skb
