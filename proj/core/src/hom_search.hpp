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

#ifndef SKB_SRC_HOM_SEARCH_HPP_
#define SKB_SRC_HOM_SEARCH_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "skb/group.hpp"

namespace skb::detail {

/// Enumerates the isomorphisms src -> dst, each determined by the images of
/// `gens` (a generating set of src). Images of gens[i] are restricted to the
/// targets t with candidate(i, t); partial maps are extended over the
/// subgroup generated so far and pruned on the first inconsistency.
/// `visit` receives the full label map and returns false to stop the search.
void for_each_isomorphism(const GroupTable& src, const GroupTable& dst,
                          std::span<const Elem> gens,
                          const std::function<bool(std::size_t, Elem)>& candidate,
                          const std::function<bool(const std::vector<Elem>&)>& visit);

}  // namespace skb::detail

#endif  // SKB_SRC_HOM_SEARCH_HPP_
