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

#ifndef OPENGAMES_VALUE_SET_HPP_
#define OPENGAMES_VALUE_SET_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opengames/finset.hpp"

namespace opengames {

using Value = std::vector<double>;

// Carrier of utilities or coutilities (the R and S of a game boundary).
//
// A finite carrier is a FinSet whose elements each carry a real vector of a
// common dimension; values flowing through games are those vectors, and
// table-driven games translate them back to elements. A real carrier is all
// of R^dim and cannot be enumerated.
class ValueSet {
 public:
  // Finite carrier with explicit payloads. `dim` is only needed when the
  // carrier is empty.
  static ValueSet Finite(FinSet labels, std::vector<Value> payloads,
                         std::optional<std::size_t> dim = std::nullopt);
  // Finite carrier whose i-th element has payload {i}.
  static ValueSet Indexed(FinSet labels);
  // Finite carrier of scalars labelled by their decimal text.
  static ValueSet Numeric(const std::vector<double>& values);
  static ValueSet Real(std::size_t dim);
  // One element "*" with an empty payload; the utility side of the unit.
  static ValueSet Unit();

  bool is_finite() const { return finite_; }
  std::size_t dim() const { return dim_; }
  // Finite carriers only.
  std::size_t size() const { return labels_.size(); }
  const FinSet& labels() const { return labels_; }
  std::span<const double> value(Index i) const {
    return {payloads_.data() + i * dim_, dim_};
  }

  std::optional<Index> Find(std::span<const double> v) const;
  // Throws kValueOutsideCarrier.
  Index IndexOf(std::span<const double> v) const;
  bool Contains(std::span<const double> v) const;

  friend bool operator==(const ValueSet& a, const ValueSet& b);
  friend bool operator!=(const ValueSet& a, const ValueSet& b) {
    return !(a == b);
  }

 private:
  ValueSet() = default;

  bool finite_ = false;
  std::size_t dim_ = 0;
  FinSet labels_;
  std::vector<double> payloads_;
};

// Product carrier; values are concatenated (a first). Finite x finite stays
// finite with paired labels, anything else becomes R^(dim a + dim b).
ValueSet Product(const ValueSet& a, const ValueSet& b);

}  // namespace opengames

#endif  // OPENGAMES_VALUE_SET_HPP_
