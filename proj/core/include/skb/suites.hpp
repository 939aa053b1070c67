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

#ifndef SKB_SUITES_HPP_
#define SKB_SUITES_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skb/enumeration.hpp"

namespace skb {

// Named theorem suites run exhaustively over brace catalogs:
//   lemmas        lambda identities, star-product expansions, conjugation formula
//   lemma22       identities for factorizations through trivial left ideals
//   ito           B*C, C*B strong and trivial, A^(2) = B*C + C*B, A^(2)
//                 meta-trivial; class <= 3 when both factors are strong
//   itocor        B strong: a non-zero trivializing ideal inside B or C, and
//                 class <= 4
//   decomposable  proper strong left ideals decompose (A, r_A)
//   solutions     r_A is a non-degenerate solution, involutive iff (A,+) abelian
//   multiperm     left braces: multipermutation level of r_A = right class - 1
//   soc-fix       Fix(A) and (left braces) Soc(A) are factorized
//   exact         braces from exact factorizations of every catalog group
//   charsimple    characteristically simple iff a power of a simple brace

struct SuiteFailure {
  std::size_t order = 0;
  std::size_t brace_index = 0;  // position in the catalog of that order
  std::string check;
  std::vector<Elem> witness;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t braces = 0;  // braces visited
  std::size_t cases = 0;   // factorizations, ideals or braces actually checked
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  /// Without it a suite stops at the first failure.
  bool keep_going = false;
};

std::vector<std::string_view> suite_names();

/// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::span<const BraceCatalog> catalogs,
                      const SuiteOptions& options = {});

/// Runs over braces_of_order(k) for k = 1..max_order.
SuiteReport run_suite(std::string_view name, std::size_t max_order,
                      const SuiteOptions& options = {},
                      const EnumerationOptions& enumeration = {});

}  // namespace skb

#endif  // SKB_SUITES_HPP_
