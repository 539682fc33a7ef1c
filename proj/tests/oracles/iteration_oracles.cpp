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

#include "oracles/iteration_oracles.hpp"

#include <cmath>
#include <deque>

namespace opengames::oracle {

Value DirectValue(const UtilityFunctional& k,
                  const std::function<std::size_t(std::size_t)>& w) {
  const std::size_t dim = k.dim();
  Value sum(dim, 0.0);
  std::size_t terms = 0;
  double weight_of_term = 1.0;
  switch (k.kind()) {
    case UtilityKind::kDiscounted: {
      for (std::size_t i = 0;; ++i) {
        weight_of_term = std::pow(k.delta(), static_cast<double>(i));
        if (weight_of_term < 1e-16) break;
        auto u = k.payoff(w(i));
        for (std::size_t c = 0; c < dim; ++c) sum[c] += weight_of_term * u[c];
      }
      break;
    }
    case UtilityKind::kFiniteHorizon:
    case UtilityKind::kMeanPayoffApprox:
      terms = k.horizon() - k.consumed();
      for (std::size_t i = 0; i < terms; ++i) {
        auto u = k.payoff(w(i));
        for (std::size_t c = 0; c < dim; ++c) sum[c] += u[c];
      }
      break;
  }
  Value out(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const double offset = k.offset().empty() ? 0.0 : k.offset()[c];
    out[c] = offset + k.scale() * sum[c];
  }
  return out;
}

std::vector<std::size_t> UnrolledPlay(const StrategyTransducer& t,
                                      const std::vector<std::size_t>& play_of,
                                      std::size_t rounds) {
  const auto& step = t.step_table();
  const auto& stage = t.stage_table();
  const std::size_t m = t.num_moves();
  std::vector<std::size_t> history;
  for (std::size_t n = 0; n < rounds; ++n) {
    std::size_t q = t.initial();
    for (std::size_t y : history) q = step[q * m + y];
    history.push_back(play_of[stage[q]]);
  }
  return history;
}

namespace {

// Discounted self-play value from machine state q, per player.
std::array<double, 2> SelfPlayValue(
    const std::vector<std::array<double, 2>>& payoff,
    const StrategyTransducer& t, std::size_t q, double delta) {
  std::array<double, 2> v{0.0, 0.0};
  double w = 1.0;
  for (int round = 0; round < 4000 && w > 0.0; ++round) {
    const std::size_t y = t.stage(q);
    v[0] += w * payoff[y][0];
    v[1] += w * payoff[y][1];
    w *= delta;
    q = t.step(q, y);
  }
  return v;
}

}  // namespace

DeviationCheck OneDeviationBimatrix(
    std::size_t n1, std::size_t n2,
    const std::vector<std::array<double, 2>>& payoff,
    const StrategyTransducer& t, double delta, double tol) {
  const std::size_t moves = n1 * n2;
  std::vector<char> seen(t.num_states(), 0);
  std::deque<std::size_t> queue{t.initial()};
  seen[t.initial()] = 1;
  while (!queue.empty()) {
    const std::size_t q = queue.front();
    queue.pop_front();
    auto value = [&](std::size_t y, int player) {
      return payoff[y][player] +
             delta * SelfPlayValue(payoff, t, t.step(q, y), delta)[player];
    };
    const std::size_t profile = t.stage(q);
    const std::size_t a = profile / n2;
    const std::size_t b = profile % n2;
    const double mine1 = value(profile, 0);
    const double mine2 = value(profile, 1);
    for (std::size_t a2 = 0; a2 < n1; ++a2) {
      if (value(a2 * n2 + b, 0) > mine1 + tol) return {false, q};
    }
    for (std::size_t b2 = 0; b2 < n2; ++b2) {
      if (value(a * n2 + b2, 1) > mine2 + tol) return {false, q};
    }
    for (std::size_t y = 0; y < moves; ++y) {
      const std::size_t next = t.step(q, y);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return {};
}

double BisectThreshold(const std::function<bool(double)>& holds, double lo,
                       double hi, double eps) {
  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace opengames::oracle
