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

#ifndef SKB_SUBSET_HPP_
#define SKB_SUBSET_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skb/error.hpp"

namespace skb {

/// A subset of the carrier {0, ..., n-1}, kept as a strictly increasing
/// element list so that set equality is structural equality.
///
/// Subsets order by size first, then lexicographically; every list of
/// subgroups or ideals returned by the library uses this order.
class Subset {
 public:
  Subset() = default;
  /// Sorts and deduplicates; throws InvalidInput on out-of-range elements.
  Subset(std::size_t ambient, std::vector<Elem> elements);

  static Subset zero(std::size_t ambient) { return Subset(ambient, {0}); }
  static Subset full(std::size_t ambient);
  static Subset from_mask(const std::vector<char>& mask);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::size_t ambient() const noexcept { return ambient_; }
  std::span<const Elem> elements() const noexcept { return elements_; }
  Elem operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(Elem x) const;
  bool is_subset_of(const Subset& other) const;
  bool is_zero() const noexcept { return elements_.size() == 1 && elements_[0] == 0; }
  bool is_full() const noexcept { return elements_.size() == ambient_; }
  std::vector<char> mask() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.ambient_ == b.ambient_ && a.elements_ == b.elements_;
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  std::size_t ambient_ = 0;
  std::vector<Elem> elements_;
};

Subset intersect(const Subset& a, const Subset& b);

/// "{0, 2, 4}"
std::string to_string(const Subset& s);

}  // namespace skb

#endif  // SKB_SUBSET_HPP_
