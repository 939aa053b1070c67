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

#include "skb/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace skb {

namespace {

void check_latin(std::size_t n, const std::vector<Elem>& flat) {
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Elem v = flat[a * n + b];
      if (seen[v]) {
        throw Error(ErrorKind::NotLatinSquare, "row repeats an entry",
                    {static_cast<Elem>(a), v});
      }
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      Elem v = flat[a * n + b];
      if (seen[v]) {
        throw Error(ErrorKind::NotLatinSquare, "column repeats an entry",
                    {static_cast<Elem>(b), v});
      }
      seen[v] = 1;
    }
  }
}

}  // namespace

GroupTable::GroupTable(std::size_t n, std::vector<Elem> flat, bool check_associativity)
    : order_(n), table_(std::move(flat)) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty table");
  if (table_.size() != n * n) throw Error(ErrorKind::InvalidInput, "table is not square");
  for (Elem v : table_) {
    if (v >= n) throw Error(ErrorKind::InvalidInput, "table entry out of range", {v});
  }
  check_latin(n, table_);
  for (std::size_t a = 0; a < n; ++a) {
    if (op(0, static_cast<Elem>(a)) != a || op(static_cast<Elem>(a), 0) != a) {
      throw Error(ErrorKind::NoIdentityAtZero, "element 0 is not a two-sided identity",
                  {static_cast<Elem>(a)});
    }
  }
  inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    Elem b = 0;
    while (op(a, b) != 0) ++b;  // Latin: exactly one b with ab = 0
    if (op(b, a) != 0) {
      throw Error(ErrorKind::MissingInverse, "no two-sided inverse", {a});
    }
    inv_[a] = b;
  }
  if (check_associativity) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = op(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (op(ab, c) != op(a, op(b, c))) {
            throw Error(ErrorKind::NonAssociative, "(ab)c != a(bc)", {a, b, c});
          }
        }
      }
    }
  }
  element_orders_.assign(n, 1);
  for (Elem a = 1; a < n; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = op(x, a)) ++k;
    element_orders_[a] = k;
  }
  for (Elem a = 0; a < n && abelian_; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (op(a, b) != op(b, a)) {
        abelian_ = false;
        break;
      }
    }
  }
}

Matrix GroupTable::to_matrix() const {
  Matrix m(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    m[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  }
  return m;
}

GroupTable validate_group(const Matrix& table) {
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return GroupTable(n, std::move(flat), true);
}

GroupTable group_from_construction(std::size_t n, std::vector<Elem> flat) {
  return GroupTable(n, std::move(flat), false);
}

GroupTable relabel(const GroupTable& g, const Permutation& p) {
  const std::size_t n = g.order();
  if (p.size() != n || p(0) != 0) {
    throw Error(ErrorKind::InvalidInput, "relabelling must fix 0 and match the order");
  }
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) flat[p(a) * n + p(b)] = p(g.op(a, b));
  }
  return group_from_construction(n, std::move(flat));
}

GroupTable induced_subgroup(const GroupTable& g, const Subset& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorKind::NotASubgroup, "subset is not a subgroup");
  const std::size_t k = s.size();
  std::vector<Elem> index(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) index[s[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = index[g.op(s[i], s[j])];
  }
  return group_from_construction(k, std::move(flat));
}

Subset subgroup_generated(const GroupTable& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.op(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return Subset(n, std::move(elems));
}

Subset subgroup_generated(const GroupTable& g, const Subset& gens) {
  return subgroup_generated(g, gens.elements());
}

bool is_subgroup(const GroupTable& g, const Subset& s) {
  if (s.ambient() != g.order() || !s.contains(0)) return false;
  const auto mask = s.mask();
  for (Elem a : s) {
    if (!mask[g.inv(a)]) return false;
    for (Elem b : s) {
      if (!mask[g.op(a, b)]) return false;
    }
  }
  return true;
}

std::vector<Subset> all_subgroups(const GroupTable& g) {
  const std::size_t n = g.order();
  struct Node {
    Subset elems;
    std::vector<Elem> gens;
  };
  std::set<Subset> seen;
  std::deque<Node> queue;
  Subset trivial = Subset::zero(n);
  seen.insert(trivial);
  queue.push_back({trivial, {}});
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const auto mask = node.elems.mask();
    for (Elem x = 1; x < n; ++x) {
      if (mask[x]) continue;
      std::vector<Elem> gens = node.gens;
      gens.push_back(x);
      Subset bigger = subgroup_generated(g, gens);
      if (seen.insert(bigger).second) queue.push_back({bigger, std::move(gens)});
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_normal(const GroupTable& g, const Subset& s) {
  if (!is_subgroup(g, s)) throw Error(ErrorKind::NotASubgroup, "subset is not a subgroup");
  const auto mask = s.mask();
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem h : s) {
      if (!mask[g.op(g.op(a, h), g.inv(a))]) return false;
    }
  }
  return true;
}

Subset center(const GroupTable& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.op(a, b) == g.op(b, a);
    if (central) z.push_back(a);
  }
  return Subset(g.order(), std::move(z));
}

std::vector<Elem> generating_set(const GroupTable& g) {
  std::vector<Elem> gens;
  Subset current = Subset::zero(g.order());
  while (current.size() < g.order()) {
    const auto mask = current.mask();
    Elem best = 0;
    std::size_t best_order = 0;
    for (Elem x = 1; x < g.order(); ++x) {
      if (!mask[x] && g.element_order(x) > best_order) {
        best = x;
        best_order = g.element_order(x);
      }
    }
    gens.push_back(best);
    current = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<Subset> orbits(std::span<const Permutation> perms, std::size_t n) {
  std::vector<char> done(n, 0);
  std::vector<Subset> result;
  for (Elem start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<Elem> orbit{start};
    done[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& p : perms) {
        if (p.size() != n) throw Error(ErrorKind::InvalidInput, "permutation degree mismatch");
        Elem y = p(orbit[i]);
        if (!done[y]) {
          done[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    result.emplace_back(n, std::move(orbit));
  }
  return result;
}

}  // namespace skb
