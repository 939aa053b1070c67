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

#ifndef SKB_ERROR_HPP_
#define SKB_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skb {

using Elem = std::uint32_t;

enum class ErrorKind {
  // Input shape problems (bad dimensions, malformed files).
  InvalidInput,
  // group-core
  NotLatinSquare,
  NoIdentityAtZero,
  NonAssociative,
  MissingInverse,
  NotASubgroup,
  UnsupportedOrder,
  GroupTooLarge,
  // brace-core
  OrderMismatch,
  CompatibilityFailure,
  NotLeftIdeal,
  NotIdeal,
  // factorization
  PreconditionViolated,
  NotExact,
  NotALeftBrace,
  // ybe
  NotBijectiveR,
  BraidFailure,
  NotInvolutive,
  NotNondegenerate,
  IllDefined,
  NotProperStrongLeftIdeal,
  DecompositionFailure,
  // enumeration
  OrderCapExceeded,
  UnknownPredicate,
};

std::string_view to_string(ErrorKind kind);

/// Exception type for every failure raised by the library.
///
/// `witness()` carries the element indices that exhibit the failure (for
/// example the triple (a, b, c) on which associativity breaks); it is empty
/// for failures that have no natural witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<Elem> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Elem> witness_;
};

/// True for errors caused by malformed input rather than a failed check.
bool is_input_error(ErrorKind kind);

}  // namespace skb

#endif  // SKB_ERROR_HPP_
