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

#include "opengames/utility.hpp"

#include <cmath>

#include "opengames/error.hpp"

namespace opengames {

UtilityFunctional UtilityFunctional::Make(UtilityKind kind, FinSet moves,
                                          std::vector<Value> stage_payoff,
                                          Value offset, double scale) {
  if (moves.empty()) Fail(ErrorKind::kEmptyMoveSet, "utility over no moves");
  if (stage_payoff.size() != moves.size()) {
    Fail(ErrorKind::kSchemaError, "stage payoff must cover every move");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    Fail(ErrorKind::kInvalidArgument, "affine scale must be positive");
  }
  UtilityFunctional k;
  k.kind_ = kind;
  k.dim_ = stage_payoff.front().size();
  for (Index y = 0; y < moves.size(); ++y) {
    if (stage_payoff[y].size() != k.dim_) {
      Fail(ErrorKind::kSchemaError, "stage payoffs differ in dimension at '" +
                                        moves.label(y) + "'");
    }
    for (double v : stage_payoff[y]) {
      if (!std::isfinite(v)) {
        Fail(ErrorKind::kInvalidArgument, "stage payoffs must be finite");
      }
      k.max_abs_ = std::max(k.max_abs_, std::abs(v));
      k.payoff_.push_back(v);
    }
  }
  if (offset.empty()) offset.assign(k.dim_, 0.0);
  if (offset.size() != k.dim_) {
    Fail(ErrorKind::kSchemaError, "offset dimension differs from payoffs");
  }
  k.moves_ = std::move(moves);
  k.offset_ = std::move(offset);
  k.scale_ = scale;
  return k;
}

UtilityFunctional UtilityFunctional::Discounted(FinSet moves,
                                                std::vector<Value> stage_payoff,
                                                double delta, Value offset,
                                                double scale) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    Fail(ErrorKind::kInvalidArgument, "discount must lie in [0, 1)");
  }
  UtilityFunctional k = Make(UtilityKind::kDiscounted, std::move(moves),
                             std::move(stage_payoff), std::move(offset), scale);
  k.delta_ = delta;
  return k;
}

UtilityFunctional UtilityFunctional::FiniteHorizon(
    FinSet moves, std::vector<Value> stage_payoff, std::size_t horizon,
    Value offset, double scale) {
  if (horizon == 0) Fail(ErrorKind::kInvalidArgument, "horizon must be >= 1");
  UtilityFunctional k = Make(UtilityKind::kFiniteHorizon, std::move(moves),
                             std::move(stage_payoff), std::move(offset), scale);
  k.delta_ = 1.0;
  k.horizon_ = horizon;
  return k;
}

UtilityFunctional UtilityFunctional::MeanPayoffApprox(
    FinSet moves, std::vector<Value> stage_payoff, std::size_t horizon) {
  if (horizon == 0) Fail(ErrorKind::kInvalidArgument, "window must be >= 1");
  UtilityFunctional k =
      Make(UtilityKind::kMeanPayoffApprox, std::move(moves),
           std::move(stage_payoff), {}, 1.0 / static_cast<double>(horizon));
  k.delta_ = 1.0;
  k.horizon_ = horizon;
  return k;
}

namespace {

void CheckMove(const UtilityFunctional& k, Index y) {
  if (y >= k.moves().size()) {
    Fail(ErrorKind::kUnknownMove, "move index outside the utility's moves");
  }
}

// Running state of the left-to-right evaluation. Shift performs exactly one
// Step, which is why shifted and unshifted evaluations agree bit for bit.
struct Accumulator {
  Value acc;
  double weight;
  std::size_t remaining;  // finite kinds only

  Accumulator(const UtilityFunctional& k)
      : acc(k.offset()), weight(k.scale()), remaining(k.horizon()) {}

  // Returns false once a finite horizon is used up.
  bool Step(const UtilityFunctional& k, Index y) {
    CheckMove(k, y);
    if (k.kind() != UtilityKind::kDiscounted && remaining == 0) return false;
    auto u = k.payoff(y);
    for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += weight * u[d];
    if (k.kind() == UtilityKind::kDiscounted) {
      weight *= k.delta();
    } else {
      --remaining;
    }
    return true;
  }
};

}  // namespace

PrefixValue EvaluatePrefix(const UtilityFunctional& k,
                           std::span<const Index> prefix) {
  if (k.kind() == UtilityKind::kMeanPayoffApprox && k.consumed() == 0 &&
      prefix.empty()) {
    Fail(ErrorKind::kEmptyPrefix, "mean payoff of an empty prefix");
  }
  Accumulator run(k);
  for (Index y : prefix) {
    if (!run.Step(k, y)) break;
  }
  PrefixValue out;
  if (k.kind() == UtilityKind::kDiscounted) {
    out.tail_bound = run.weight * k.max_abs_payoff() / (1.0 - k.delta());
  } else {
    out.tail_bound =
        run.weight * static_cast<double>(run.remaining) * k.max_abs_payoff();
  }
  out.value = std::move(run.acc);
  return out;
}

Value EvaluateLasso(const UtilityFunctional& k, std::span<const Index> prefix,
                    std::span<const Index> cycle) {
  if (cycle.empty()) {
    Fail(ErrorKind::kInvalidArgument, "a lasso needs a nonempty cycle");
  }
  Accumulator run(k);
  for (Index y : prefix) {
    if (!run.Step(k, y)) return std::move(run.acc);
  }
  if (k.kind() != UtilityKind::kDiscounted) {
    while (run.remaining > 0) {
      for (Index y : cycle) {
        if (!run.Step(k, y)) break;
      }
    }
    return std::move(run.acc);
  }
  // prefix value + weight * (sum_j delta^j u(c_j)) / (1 - delta^L)
  Value cycle_sum(k.dim(), 0.0);
  double d = 1.0;
  for (Index y : cycle) {
    CheckMove(k, y);
    auto u = k.payoff(y);
    for (std::size_t i = 0; i < cycle_sum.size(); ++i) cycle_sum[i] += d * u[i];
    d *= k.delta();
  }
  const double denominator = 1.0 - d;
  for (std::size_t i = 0; i < run.acc.size(); ++i) {
    run.acc[i] += run.weight * (cycle_sum[i] / denominator);
  }
  return std::move(run.acc);
}

UtilityFunctional Shift(const UtilityFunctional& k, Index y) {
  CheckMove(k, y);
  if (k.kind() != UtilityKind::kDiscounted && k.horizon() == 0) {
    Fail(ErrorKind::kHorizonExhausted, "no horizon left to shift past");
  }
  Accumulator run(k);
  run.Step(k, y);
  UtilityFunctional out = k;
  out.offset_ = std::move(run.acc);
  out.scale_ = run.weight;
  out.horizon_ = run.remaining;
  ++out.consumed_;
  return out;
}

UtilityFunctional Shift(const UtilityFunctional& k,
                        std::span<const Index> prefix) {
  UtilityFunctional out = k;
  for (Index y : prefix) out = Shift(out, y);
  return out;
}

}  // namespace opengames
