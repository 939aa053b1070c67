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

#include "skb/ybe.hpp"

#include <algorithm>
#include <map>

namespace skb {

namespace {

Matrix unflatten(const std::vector<Elem>& flat, std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  return m;
}

bool row_bijective(const std::vector<Elem>& flat, std::size_t n, std::size_t row) {
  std::vector<char> seen(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Elem v = flat[row * n + j];
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<Permutation> sigma_and_tau_rows(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<Permutation> perms;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> sig(n), ta(n);
    for (Elem y = 0; y < n; ++y) {
      sig[y] = s.sigma(x, y);
      ta[y] = s.tau(x, y);
    }
    perms.emplace_back(std::move(sig));
    perms.emplace_back(std::move(ta));
  }
  return perms;
}

}  // namespace

Matrix Solution::sigma_matrix() const { return unflatten(sigma_, size_); }
Matrix Solution::tau_matrix() const { return unflatten(tau_, size_); }

Solution validate_solution(const Matrix& sigma, const Matrix& tau, bool require_nondegenerate) {
  const std::size_t n = sigma.size();
  if (n == 0 || tau.size() != n) throw Error(ErrorKind::InvalidInput, "sigma and tau must be n x n");
  Solution s;
  s.size_ = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i].size() != n || tau[i].size() != n) {
      throw Error(ErrorKind::InvalidInput, "sigma and tau must be n x n");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (sigma[i][j] >= n || tau[i][j] >= n) {
        throw Error(ErrorKind::InvalidInput, "entry out of range",
                    {static_cast<Elem>(i), static_cast<Elem>(j)});
      }
    }
    s.sigma_.insert(s.sigma_.end(), sigma[i].begin(), sigma[i].end());
    s.tau_.insert(s.tau_.end(), tau[i].begin(), tau[i].end());
  }

  std::vector<char> hit(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const auto [u, v] = s.r(x, y);
      if (hit[u * n + v]) throw Error(ErrorKind::NotBijectiveR, "r is not injective", {x, y});
      hit[u * n + v] = 1;
    }
  }
  if (require_nondegenerate) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!row_bijective(s.sigma_, n, x) || !row_bijective(s.tau_, n, x)) {
        throw Error(ErrorKind::NotBijectiveR, "sigma_x or tau_x is not bijective",
                    {static_cast<Elem>(x)});
      }
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const auto [a, b] = s.r(x, y);
      for (Elem z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id)
        const auto [c, d] = s.r(b, z);
        const auto [l1, l2] = s.r(a, c);
        // (id x r)(r x id)(id x r)
        const auto [e, f] = s.r(y, z);
        const auto [g, h] = s.r(x, e);
        const auto [r2, r3] = s.r(h, f);
        if (l1 != g || l2 != r2 || d != r3) {
          throw Error(ErrorKind::BraidFailure, "braid relation fails", {x, y, z});
        }
      }
    }
  }
  return s;
}

bool is_involutive(const Solution& s) {
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      const auto [u, v] = s.r(x, y);
      if (s.r(u, v) != std::pair<Elem, Elem>{x, y}) return false;
    }
  }
  return true;
}

bool is_nondegenerate(const Solution& s) {
  const std::size_t n = s.size();
  std::vector<char> seen_sigma(n), seen_tau(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(seen_sigma.begin(), seen_sigma.end(), 0);
    std::fill(seen_tau.begin(), seen_tau.end(), 0);
    for (Elem y = 0; y < n; ++y) {
      const Elem u = s.sigma(x, y), v = s.tau(x, y);
      if (seen_sigma[u] || seen_tau[v]) return false;
      seen_sigma[u] = seen_tau[v] = 1;
    }
  }
  return true;
}

Solution solution_from_brace(const SkewBrace& a) {
  const std::size_t n = a.order();
  Matrix sigma(n, std::vector<Elem>(n)), tau(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem l = a.lambda(x)(y);
      sigma[x][y] = l;
      tau[y][x] = a.circ(a.circ(a.circ_inverse(l), x), y);
    }
  }
  return validate_solution(sigma, tau);
}

Solution flip_solution(std::size_t n) {
  Matrix sigma(n, std::vector<Elem>(n)), tau(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      sigma[x][y] = y;
      tau[y][x] = x;
    }
  }
  return validate_solution(sigma, tau);
}

bool is_decomposition(const Solution& s, const Subset& y) {
  const std::size_t n = s.size();
  if (y.empty() || y.size() == n) return false;
  const auto in_y = y.mask();
  std::vector<char> image_yz(n * n, 0), image_zy(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const auto [u, v] = s.r(a, b);
      if (in_y[a] == in_y[b]) {
        // r(Y x Y) in Y x Y and r(Z x Z) in Z x Z
        if (in_y[u] != in_y[a] || in_y[v] != in_y[a]) return false;
      } else if (in_y[a]) {
        image_yz[u * n + v] = 1;
      } else {
        image_zy[u * n + v] = 1;
      }
    }
  }
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      // r(Y x Z) must be exactly Z x Y, and r(Z x Y) exactly Y x Z.
      const bool zy = !in_y[u] && in_y[v];
      const bool yz = in_y[u] && !in_y[v];
      if (image_yz[u * n + v] != zy || image_zy[u * n + v] != yz) return false;
    }
  }
  return true;
}

namespace {

Subset complement(const Subset& s) {
  std::vector<Elem> out;
  for (Elem x = 0; x < s.ambient(); ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return Subset(s.ambient(), std::move(out));
}

}  // namespace

Decomposition decomposition_from_strong_left_ideal(const SkewBrace& a, const Subset& ideal) {
  if (ideal.is_zero() || ideal.is_full() || !is_strong_left_ideal(a, ideal)) {
    throw Error(ErrorKind::NotProperStrongLeftIdeal,
                "expected a proper non-zero strong left ideal");
  }
  const Solution s = solution_from_brace(a);
  if (!is_decomposition(s, ideal)) {
    throw Error(ErrorKind::DecompositionFailure, "I u A\\I is not a decomposition of r_A");
  }
  return {ideal, complement(ideal)};
}

std::optional<Decomposition> is_decomposable(const Solution& s) {
  const auto perms = sigma_and_tau_rows(s);
  const auto orbs = orbits(perms, s.size());
  if (orbs.size() < 2) return std::nullopt;
  const Subset& y = orbs.front();
  if (!is_decomposition(s, y)) {
    throw Error(ErrorKind::DecompositionFailure, "orbit does not decompose the solution");
  }
  return Decomposition{y, complement(y)};
}

Retraction retract(const Solution& s) {
  if (!is_nondegenerate(s)) throw Error(ErrorKind::NotNondegenerate, "solution is degenerate");
  if (!is_involutive(s)) throw Error(ErrorKind::NotInvolutive, "solution is not involutive");
  const std::size_t n = s.size();
  std::map<std::vector<Elem>, Elem> class_by_row;
  std::vector<Elem> class_of(n), reps;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> row(n);
    for (Elem y = 0; y < n; ++y) row[y] = s.sigma(x, y);
    auto [it, inserted] = class_by_row.emplace(std::move(row), static_cast<Elem>(reps.size()));
    if (inserted) reps.push_back(x);
    class_of[x] = it->second;
  }
  const std::size_t k = reps.size();
  Matrix sigma(k, std::vector<Elem>(k)), tau(k, std::vector<Elem>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      sigma[i][j] = class_of[s.sigma(reps[i], reps[j])];
      tau[i][j] = class_of[s.tau(reps[i], reps[j])];
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (class_of[s.sigma(x, y)] != sigma[class_of[x]][class_of[y]] ||
          class_of[s.tau(x, y)] != tau[class_of[x]][class_of[y]]) {
        throw Error(ErrorKind::IllDefined, "induced maps depend on representatives", {x, y});
      }
    }
  }
  return {validate_solution(sigma, tau), std::move(class_of)};
}

Solution retraction(const Solution& s) { return retract(s).solution; }

MultipermutationVerdict multipermutation_level(const Solution& s, std::optional<std::size_t> cap) {
  if (s.size() < 2) throw Error(ErrorKind::PreconditionViolated, "needs at least two points");
  const std::size_t limit = cap.value_or(s.size());
  Solution current = s;
  for (std::size_t step = 0;; ++step) {
    if (current.size() == 1) return {MultipermutationVerdict::Kind::Level, step};
    if (step >= limit) return {MultipermutationVerdict::Kind::CapExceeded, step};
    Solution next = retraction(current);
    if (next.size() == current.size()) return {MultipermutationVerdict::Kind::Stalled, step};
    current = std::move(next);
  }
}

PermutationGroup permutation_group_of_solution(const Solution& s, std::size_t max_order) {
  if (!is_nondegenerate(s)) throw Error(ErrorKind::NotNondegenerate, "solution is degenerate");
  std::vector<Permutation> gens;
  for (Elem x = 0; x < s.size(); ++x) {
    std::vector<Elem> row(s.size());
    for (Elem y = 0; y < s.size(); ++y) row[y] = s.sigma(x, y);
    gens.emplace_back(std::move(row));
  }
  return permutation_group(gens, s.size(), max_order);
}

}  // namespace skb
