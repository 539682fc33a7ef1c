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

#include "opengames/finset.hpp"

#include "opengames/error.hpp"

namespace opengames {

FinSet::FinSet() : FinSet(std::vector<std::string>{}) {}

FinSet::FinSet(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  data->positions.reserve(labels.size());
  for (Index i = 0; i < labels.size(); ++i) {
    if (!data->positions.emplace(labels[i], i).second) {
      Fail(ErrorKind::kDuplicateLabel, "label '" + labels[i] + "' repeats");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

FinSet FinSet::Unit() {
  static const FinSet unit(std::vector<std::string>{"*"});
  return unit;
}

FinSet FinSet::Range(std::string_view prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
  }
  return FinSet(std::move(labels));
}

std::optional<Index> FinSet::Find(std::string_view label) const {
  auto it = data_->positions.find(std::string(label));
  if (it == data_->positions.end()) return std::nullopt;
  return it->second;
}

Index FinSet::IndexOf(std::string_view label) const {
  if (auto i = Find(label)) return *i;
  Fail(ErrorKind::kUnknownLabel, "no element '" + std::string(label) + "'");
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

namespace {

std::string Wrap(std::string_view s) {
  if (s.find(',') == std::string_view::npos) return std::string(s);
  return "(" + std::string(s) + ")";
}

}  // namespace

std::string PairLabel(std::string_view a, std::string_view b) {
  return Wrap(a) + "," + Wrap(b);
}

FinSet Product(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) labels.push_back(PairLabel(la, lb));
  }
  return FinSet(std::move(labels));
}

std::optional<std::size_t> CheckedPower(std::size_t base, std::size_t exponent,
                                        std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return std::nullopt;
    result *= base;
  }
  if (result > cap) return std::nullopt;
  return result;
}

std::vector<Index> DecodeTable(Index code, std::size_t domain_size,
                               std::size_t codomain_size) {
  std::vector<Index> digits(domain_size, 0);
  for (std::size_t i = domain_size; i-- > 0;) {
    digits[i] = code % codomain_size;
    code /= codomain_size;
  }
  return digits;
}

Index EncodeTable(const std::vector<Index>& digits, std::size_t codomain_size) {
  Index code = 0;
  for (Index d : digits) code = code * codomain_size + d;
  return code;
}

FinSet FunctionSpace(const FinSet& domain, const FinSet& codomain,
                     std::size_t guard) {
  auto count = CheckedPower(codomain.size(), domain.size(), guard);
  if (!count) {
    Fail(ErrorKind::kEnumerationTooLarge,
         std::to_string(codomain.size()) + "^" + std::to_string(domain.size()) +
             " tables exceed the guard of " + std::to_string(guard));
  }
  std::vector<std::string> labels;
  labels.reserve(*count);
  for (Index code = 0; code < *count; ++code) {
    auto digits = DecodeTable(code, domain.size(), codomain.size());
    std::string label = "{";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i > 0) label += ";";
      label += domain.label(i) + ":" + codomain.label(digits[i]);
    }
    label += "}";
    labels.push_back(std::move(label));
  }
  return FinSet(std::move(labels));
}

}  // namespace opengames
