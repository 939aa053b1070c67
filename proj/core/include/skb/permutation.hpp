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

#ifndef SKB_PERMUTATION_HPP_
#define SKB_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skb/error.hpp"

namespace skb {

/// A bijection of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ErrorKind::InvalidInput unless `images` is a bijection.
  explicit Permutation(std::vector<Elem> images);

  static Permutation identity(std::size_t n);
  /// Builds a permutation from disjoint cycles on 0-based points.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Elem>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Elem operator()(Elem x) const { return images_[x]; }
  std::span<const Elem> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Composition, right to left: (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Elem> images) : images_(std::move(images)) {}

  std::vector<Elem> images_;
};

/// Disjoint-cycle notation on 0-based points, e.g. "(0 1)(2 3)"; "()" for
/// the identity.
std::string to_cycle_string(const Permutation& p);

}  // namespace skb

#endif  // SKB_PERMUTATION_HPP_
