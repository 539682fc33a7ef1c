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

#ifndef OPENGAMES_CONDITIONING_HPP_
#define OPENGAMES_CONDITIONING_HPP_

#include <vector>

#include "opengames/finset.hpp"
#include "opengames/open_game.hpp"

namespace opengames {

struct GameMorphism;
struct MorphismCheckOptions;

// A strategy of A -> H: one H-strategy per element of A.
struct ConditionedStrategy {
  std::vector<Index> table;

  friend bool operator==(const ConditionedStrategy&,
                         const ConditionedStrategy&) = default;
};

// The game A -> H : (A x X, S) -> (A x Y, R). Its strategies are all tables
// A -> Sigma_H, encoded as in FunctionSpace; a table is optimal at
// ((a, x), k) iff every component f(a') is optimal in H at x against
// k(a', -). Throws kEmptyIndexSet for empty A and kEnumerationTooLarge when
// |Sigma_H|^|A| exceeds `guard`.
OpenGame Condition(const FinSet& index_set, const OpenGame& h,
                   std::size_t guard = kDefaultEnumerationGuard);

ConditionedStrategy DecodeConditioned(Index sigma, std::size_t index_size,
                                      std::size_t inner_strategies);
Index EncodeConditioned(const ConditionedStrategy& f,
                        std::size_t inner_strategies);

// Lifts alpha : h -> h2 to (A -> h) -> (A -> h2): moves (a, y) -> (a,
// alpha_Y y), strategy tables f -> alpha_Sigma . f. The input is verified
// with CheckMorphism first (kInvalidMorphism on failure).
GameMorphism ConditionOnMorphism(const FinSet& index_set,
                                 const GameMorphism& alpha, const OpenGame& h,
                                 const OpenGame& h2,
                                 const MorphismCheckOptions& options);

}  // namespace opengames

#endif  // OPENGAMES_CONDITIONING_HPP_
