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

#include "skb/subset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skb {

Subset::Subset(std::size_t ambient, std::vector<Elem> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() && elements_.back() >= ambient_) {
    throw Error(ErrorKind::InvalidInput, "subset element out of range", {elements_.back()});
  }
}

Subset Subset::full(std::size_t ambient) {
  std::vector<Elem> all(ambient);
  std::iota(all.begin(), all.end(), Elem{0});
  return Subset(ambient, std::move(all));
}

Subset Subset::from_mask(const std::vector<char>& mask) {
  std::vector<Elem> elems;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) elems.push_back(static_cast<Elem>(i));
  }
  return Subset(mask.size(), std::move(elems));
}

bool Subset::contains(Elem x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subset::is_subset_of(const Subset& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::vector<char> Subset::mask() const {
  std::vector<char> m(ambient_, 0);
  for (Elem x : elements_) m[x] = 1;
  return m;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
  if (auto c = a.elements_ <=> b.elements_; c != 0) return c;
  return a.ambient_ <=> b.ambient_;
}

Subset intersect(const Subset& a, const Subset& b) {
  std::vector<Elem> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Subset(a.ambient(), std::move(out));
}

std::string to_string(const Subset& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << s[i];
  }
  out << '}';
  return out.str();
}

}  // namespace skb
