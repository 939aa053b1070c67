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

#include "skb/permutation.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace skb {

Permutation::Permutation(std::vector<Elem> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Elem x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorKind::InvalidInput, "image list is not a bijection", {x});
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Elem> images(n);
  std::iota(images.begin(), images.end(), Elem{0});
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Elem>>& cycles) {
  std::vector<Elem> images(n);
  std::iota(images.begin(), images.end(), Elem{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= n) {
        throw Error(ErrorKind::InvalidInput, "cycle point out of range", {cycle[i]});
      }
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Elem> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Elem>(i);
  return Permutation(Unchecked{}, std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::InvalidInput, "composing permutations of different degree");
  }
  std::vector<Elem> images(p.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p.images_[q.images_[i]];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (Elem start = 0; start < p.size(); ++start) {
    if (done[start] || p(start) == start) continue;
    any = true;
    out << '(';
    Elem x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      done[x] = 1;
      first = false;
      x = p(x);
    } while (x != start);
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

}  // namespace skb
