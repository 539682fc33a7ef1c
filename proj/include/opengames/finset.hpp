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

#ifndef OPENGAMES_FINSET_HPP_
#define OPENGAMES_FINSET_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace opengames {

using Index = std::size_t;

// Default cap on eagerly materialized sets (strategy tables, k-enumerations).
inline constexpr std::size_t kDefaultEnumerationGuard = 1'000'000;

// A finite set of pairwise distinct labels in a fixed order. Elements are
// addressed by their position; the order drives every enumeration.
// Copies share the underlying storage.
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<std::string> labels);

  // {"*"}: the one-element set used for trivial states and units.
  static FinSet Unit();
  // {prefix0, prefix1, ...}
  static FinSet Range(std::string_view prefix, std::size_t n);

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return data_->labels.empty(); }
  const std::string& label(Index i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }

  std::optional<Index> Find(std::string_view label) const;
  // Throws kUnknownLabel.
  Index IndexOf(std::string_view label) const;

  friend bool operator==(const FinSet& a, const FinSet& b);
  friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Index> positions;
  };
  std::shared_ptr<const Data> data_;
};

// Label of the pair (a, b). Components containing ',' are parenthesized so
// nested products stay readable: "C,D", "(x,y),z".
std::string PairLabel(std::string_view a, std::string_view b);

// Cartesian product; (i, j) is element i * |b| + j.
FinSet Product(const FinSet& a, const FinSet& b);

// All total functions domain -> codomain, enumerated in lexicographic order of
// (f(d0), f(d1), ...): element index is the mixed-radix number with digit
// f(d0) most significant. Throws kEnumerationTooLarge above `guard`.
FinSet FunctionSpace(const FinSet& domain, const FinSet& codomain,
                     std::size_t guard = kDefaultEnumerationGuard);

// |base|^exponent, or nullopt if it exceeds `cap`.
std::optional<std::size_t> CheckedPower(std::size_t base, std::size_t exponent,
                                        std::size_t cap);

// Digits of a mixed-radix function-table index (see FunctionSpace).
std::vector<Index> DecodeTable(Index code, std::size_t domain_size,
                               std::size_t codomain_size);
Index EncodeTable(const std::vector<Index>& digits, std::size_t codomain_size);

}  // namespace opengames

#endif  // OPENGAMES_FINSET_HPP_
