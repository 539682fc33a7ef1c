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

#ifndef OPENGAMES_UTILITY_HPP_
#define OPENGAMES_UTILITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "opengames/finset.hpp"
#include "opengames/value_set.hpp"

namespace opengames {

enum class UtilityKind { kDiscounted, kFiniteHorizon, kMeanPayoffApprox };

// A utility on move streams, k(w) = offset + scale * sum_i weight_i * u(w_i),
// with weight_i = delta^i (discounted) or 1 for the first `horizon` moves
// (finite horizon, window mean). Values are p-dimensional, one coordinate per
// player. The family is closed under Shift, which is what the iterated
// equilibrium check needs.
class UtilityFunctional {
 public:
  // stage_payoff[y] has the common dimension p. offset defaults to zeros.
  static UtilityFunctional Discounted(FinSet moves,
                                      std::vector<Value> stage_payoff,
                                      double delta, Value offset = {},
                                      double scale = 1.0);
  static UtilityFunctional FiniteHorizon(FinSet moves,
                                         std::vector<Value> stage_payoff,
                                         std::size_t horizon,
                                         Value offset = {}, double scale = 1.0);
  // Average of the first `horizon` stage payoffs. Flagged approximate.
  static UtilityFunctional MeanPayoffApprox(FinSet moves,
                                            std::vector<Value> stage_payoff,
                                            std::size_t horizon);

  UtilityKind kind() const { return kind_; }
  const FinSet& moves() const { return moves_; }
  std::size_t dim() const { return dim_; }
  double delta() const { return delta_; }
  // Remaining horizon (finite horizon and mean payoff).
  std::size_t horizon() const { return horizon_; }
  // Moves already absorbed by Shift.
  std::size_t consumed() const { return consumed_; }
  const Value& offset() const { return offset_; }
  double scale() const { return scale_; }
  std::span<const double> payoff(Index y) const {
    return {payoff_.data() + y * dim_, dim_};
  }
  // max over moves and coordinates of |u|.
  double max_abs_payoff() const { return max_abs_; }
  bool approximate() const { return kind_ == UtilityKind::kMeanPayoffApprox; }

  friend bool operator==(const UtilityFunctional&,
                         const UtilityFunctional&) = default;

 private:
  friend UtilityFunctional Shift(const UtilityFunctional& k, Index y);

  UtilityFunctional() = default;
  static UtilityFunctional Make(UtilityKind kind, FinSet moves,
                                std::vector<Value> stage_payoff, Value offset,
                                double scale);

  UtilityKind kind_ = UtilityKind::kDiscounted;
  FinSet moves_;
  std::size_t dim_ = 0;
  std::vector<double> payoff_;
  double max_abs_ = 0.0;
  double delta_ = 0.0;
  std::size_t horizon_ = 0;
  std::size_t consumed_ = 0;
  Value offset_;
  double scale_ = 1.0;
};

using StreamPrefix = std::vector<Index>;

struct PrefixValue {
  Value value;
  // Every stream extending the prefix has a value within tail_bound of
  // `value` in each coordinate.
  double tail_bound = 0.0;
};

// Throws kEmptyPrefix for a mean-payoff functional that has seen no move.
PrefixValue EvaluatePrefix(const UtilityFunctional& k,
                           std::span<const Index> prefix);

// Exact value of the stream prefix . cycle . cycle . ... ; cycle nonempty.
Value EvaluateLasso(const UtilityFunctional& k, std::span<const Index> prefix,
                    std::span<const Index> cycle);

// k'(z) = k(y :: z). Bit-exact: EvaluatePrefix(Shift(k, y), w).value equals
// EvaluatePrefix(k, y :: w).value. Throws kHorizonExhausted on a finite
// horizon that has run out.
UtilityFunctional Shift(const UtilityFunctional& k, Index y);
UtilityFunctional Shift(const UtilityFunctional& k,
                        std::span<const Index> prefix);

}  // namespace opengames

#endif  // OPENGAMES_UTILITY_HPP_
