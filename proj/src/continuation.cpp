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

#include "opengames/continuation.hpp"

#include <algorithm>

#include "opengames/error.hpp"

namespace opengames {

Continuation::Continuation(std::size_t moves, std::size_t dim)
    : moves_(moves), dim_(dim), data_(moves * dim, 0.0) {}

Continuation Continuation::FromRows(const std::vector<Value>& rows,
                                    std::size_t dim) {
  Continuation k(rows.size(), dim);
  for (Index y = 0; y < rows.size(); ++y) k.Set(y, rows[y]);
  return k;
}

Continuation Continuation::FromElements(const ValueSet& carrier,
                                        std::span<const Index> elements) {
  if (!carrier.is_finite()) {
    Fail(ErrorKind::kInvalidArgument, "carrier is not finite");
  }
  Continuation k(elements.size(), carrier.dim());
  for (Index y = 0; y < elements.size(); ++y) {
    k.Set(y, carrier.value(elements[y]));
  }
  return k;
}

Continuation Continuation::Enumerated(const ValueSet& carrier,
                                      std::size_t moves, std::size_t index) {
  auto digits = DecodeTable(index, moves, carrier.size());
  return FromElements(carrier, digits);
}

void Continuation::Set(Index y, std::span<const double> value) {
  if (value.size() != dim_) {
    Fail(ErrorKind::kInvalidArgument, "continuation row has wrong dimension");
  }
  std::ranges::copy(value, data_.begin() + y * dim_);
}

std::optional<std::size_t> ContinuationCount(const ValueSet& carrier,
                                             std::size_t moves,
                                             std::size_t cap) {
  if (!carrier.is_finite()) return std::nullopt;
  return CheckedPower(carrier.size(), moves, cap);
}

}  // namespace opengames
