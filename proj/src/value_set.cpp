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

#include "opengames/value_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "opengames/error.hpp"

namespace opengames {

ValueSet ValueSet::Finite(FinSet labels, std::vector<Value> payloads,
                          std::optional<std::size_t> dim) {
  if (labels.size() != payloads.size()) {
    Fail(ErrorKind::kSchemaError, "carrier needs one payload per label");
  }
  ValueSet set;
  set.finite_ = true;
  set.dim_ = dim.value_or(payloads.empty() ? 0 : payloads.front().size());
  for (const auto& p : payloads) {
    if (p.size() != set.dim_) {
      Fail(ErrorKind::kSchemaError, "carrier payloads differ in dimension");
    }
    set.payloads_.insert(set.payloads_.end(), p.begin(), p.end());
  }
  set.labels_ = std::move(labels);
  for (Index i = 0; i < set.size(); ++i) {
    for (Index j = 0; j < i; ++j) {
      if (std::ranges::equal(set.value(i), set.value(j))) {
        Fail(ErrorKind::kDuplicateLabel,
             "payloads of '" + set.labels_.label(i) + "' and '" +
                 set.labels_.label(j) + "' coincide");
      }
    }
  }
  return set;
}

ValueSet ValueSet::Indexed(FinSet labels) {
  std::vector<Value> payloads;
  for (Index i = 0; i < labels.size(); ++i) {
    payloads.push_back({static_cast<double>(i)});
  }
  return Finite(std::move(labels), std::move(payloads), 1);
}

ValueSet ValueSet::Numeric(const std::vector<double>& values) {
  std::vector<std::string> labels;
  std::vector<Value> payloads;
  for (double v : values) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    labels.emplace_back(buf, end);
    payloads.push_back({v});
  }
  return Finite(FinSet(std::move(labels)), std::move(payloads), 1);
}

ValueSet ValueSet::Real(std::size_t dim) {
  ValueSet set;
  set.dim_ = dim;
  return set;
}

ValueSet ValueSet::Unit() {
  return Finite(FinSet::Unit(), {Value{}});
}

std::optional<Index> ValueSet::Find(std::span<const double> v) const {
  if (!finite_ || v.size() != dim_) return std::nullopt;
  for (Index i = 0; i < size(); ++i) {
    if (std::ranges::equal(value(i), v)) return i;
  }
  return std::nullopt;
}

Index ValueSet::IndexOf(std::span<const double> v) const {
  if (auto i = Find(v)) return *i;
  std::ostringstream os;
  os << "value (";
  for (std::size_t d = 0; d < v.size(); ++d) os << (d ? "," : "") << v[d];
  os << ") is not an element of the carrier";
  Fail(ErrorKind::kValueOutsideCarrier, os.str());
}

bool ValueSet::Contains(std::span<const double> v) const {
  if (!finite_) return v.size() == dim_;
  return Find(v).has_value();
}

bool operator==(const ValueSet& a, const ValueSet& b) {
  return a.finite_ == b.finite_ && a.dim_ == b.dim_ && a.labels_ == b.labels_ &&
         a.payloads_ == b.payloads_;
}

ValueSet Product(const ValueSet& a, const ValueSet& b) {
  if (!a.is_finite() || !b.is_finite()) {
    return ValueSet::Real(a.dim() + b.dim());
  }
  std::vector<Value> payloads;
  payloads.reserve(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < b.size(); ++j) {
      Value v(a.value(i).begin(), a.value(i).end());
      v.insert(v.end(), b.value(j).begin(), b.value(j).end());
      payloads.push_back(std::move(v));
    }
  }
  return ValueSet::Finite(Product(a.labels(), b.labels()), std::move(payloads),
                          a.dim() + b.dim());
}

}  // namespace opengames
