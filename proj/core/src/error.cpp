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

#include "skb/error.hpp"

#include <sstream>
#include <utility>

namespace skb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::CompatibilityFailure: return "CompatibilityFailure";
    case ErrorKind::NotLeftIdeal: return "NotLeftIdeal";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::NotALeftBrace: return "NotALeftBrace";
    case ErrorKind::NotBijectiveR: return "NotBijectiveR";
    case ErrorKind::BraidFailure: return "BraidFailure";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NotNondegenerate: return "NotNondegenerate";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::NotProperStrongLeftIdeal: return "NotProperStrongLeftIdeal";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message,
                           const std::vector<Elem>& witness) {
  std::ostringstream out;
  out << to_string(kind) << ": " << message;
  if (!witness.empty()) {
    out << " (witness";
    for (Elem e : witness) out << ' ' << e;
    out << ')';
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::vector<Elem> witness)
    : std::runtime_error(format_message(kind, message, witness)),
      kind_(kind),
      witness_(std::move(witness)) {}

bool is_input_error(ErrorKind kind) {
  return kind == ErrorKind::InvalidInput || kind == ErrorKind::UnsupportedOrder ||
         kind == ErrorKind::OrderCapExceeded || kind == ErrorKind::UnknownPredicate;
}

}  // namespace skb
