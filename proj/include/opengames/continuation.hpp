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

#ifndef OPENGAMES_CONTINUATION_HPP_
#define OPENGAMES_CONTINUATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "opengames/finset.hpp"
#include "opengames/value_set.hpp"

namespace opengames {

// A total table k : Y -> R. Rows are R-values of a fixed dimension stored
// contiguously; equality is pointwise.
class Continuation {
 public:
  Continuation() = default;
  // `moves` rows of zeros.
  Continuation(std::size_t moves, std::size_t dim);

  static Continuation FromRows(const std::vector<Value>& rows, std::size_t dim);
  // Row y is the payload of element `elements[y]` of the finite carrier.
  static Continuation FromElements(const ValueSet& carrier,
                                   std::span<const Index> elements);
  // The index-th table of the lexicographic enumeration of R^Y (digit for
  // move 0 most significant).
  static Continuation Enumerated(const ValueSet& carrier, std::size_t moves,
                                 std::size_t index);

  std::size_t size() const { return moves_; }
  std::size_t dim() const { return dim_; }

  std::span<const double> operator[](Index y) const {
    return {data_.data() + y * dim_, dim_};
  }
  std::span<double> row(Index y) { return {data_.data() + y * dim_, dim_}; }
  void Set(Index y, std::span<const double> value);

  friend bool operator==(const Continuation&, const Continuation&) = default;

 private:
  std::size_t moves_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Number of continuations Y -> R for a finite carrier, or nullopt above cap.
std::optional<std::size_t> ContinuationCount(const ValueSet& carrier,
                                             std::size_t moves,
                                             std::size_t cap);

}  // namespace opengames

#endif  // OPENGAMES_CONTINUATION_HPP_
