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

#ifndef SKB_REPORT_HPP_
#define SKB_REPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "skb/error.hpp"

namespace skb {

/// One verdict of a verifier. A failed check carries the element indices
/// that falsify it.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<Elem> witness;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void add(std::string name, bool passed, std::vector<Elem> witness = {},
           std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(witness), std::move(detail)});
  }
};

}  // namespace skb

#endif  // SKB_REPORT_HPP_
