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


#ifndef OPENGAMES_TESTS_SUPPORT_ERRORS_HPP_
#define OPENGAMES_TESTS_SUPPORT_ERRORS_HPP_

#include <functional>
#include <optional>

#include "opengames/error.hpp"

namespace opengames::testing {

// The kind of the og::Error thrown by f, or nullopt when f returns.
inline std::optional<ErrorKind> KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace opengames::testing

#endif  // OPENGAMES_TESTS_SUPPORT_ERRORS_HPP_
