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

#ifndef OPENGAMES_ERROR_HPP_
#define OPENGAMES_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace opengames {

// Every failure the engine reports carries one of these kinds. The CLI maps
// each kind to a distinct `error.kind` string in its reports.
enum class ErrorKind {
  kBoundaryMismatch,
  kEmptyIndexSet,
  kInvalidMorphism,
  kEnumerationTooLarge,
  kEmptyPrefix,
  kHorizonExhausted,
  kNotAffineInvariant,
  kUnsupportedUtility,
  kEmptyMoveSet,
  kUnknownMove,
  kUnknownLabel,
  kDuplicateLabel,
  kValueOutsideCarrier,
  kInvalidArgument,
  kParseError,
  kSchemaError,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& message);

}  // namespace opengames

#endif  // OPENGAMES_ERROR_HPP_
