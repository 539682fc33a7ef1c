// Copyright 2026 The opengames Authors
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

#include "opengames/error.hpp"

namespace opengames {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::kEmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::kInvalidMorphism: return "InvalidMorphism";
    case ErrorKind::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::kEmptyPrefix: return "EmptyPrefix";
    case ErrorKind::kHorizonExhausted: return "HorizonExhausted";
    case ErrorKind::kNotAffineInvariant: return "NotAffineInvariant";
    case ErrorKind::kUnsupportedUtility: return "UnsupportedUtility";
    case ErrorKind::kEmptyMoveSet: return "EmptyMoveSet";
    case ErrorKind::kUnknownMove: return "UnknownMove";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kValueOutsideCarrier: return "ValueOutsideCarrier";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace opengames
