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

#ifndef OPENGAMES_GAME_LIBRARY_HPP_
#define OPENGAMES_GAME_LIBRARY_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "opengames/open_game.hpp"
#include "opengames/transducer.hpp"
#include "opengames/two_cells.hpp"

namespace opengames {

// Equilibrium of a single decision-maker with scalar utility who picks a
// strategy: sigma is optimal at (x, k) iff
// k(P(sigma, x)) >= k(P(sigma', x)) - tolerance for every sigma'.
EquilibriumFn ArgmaxEquilibrium(std::vector<Index> play, std::size_t states,
                                std::size_t strategies);
// Best alternative to sigma: gain = max over sigma' != sigma of
// k(P(sigma', x)) - k(P(sigma, x)).
DeviationFn ArgmaxDeviation(std::vector<Index> play, std::size_t states,
                            std::size_t strategies);

// (1, R) -> (Y, R) with R = reals, Sigma = Y and an argmax equilibrium.
// Flagged affine-invariant. Throws kEmptyMoveSet.
CoutilityFreeGame ArgmaxDecision(const FinSet& moves);

struct Bimatrix {
  FinSet moves1;
  FinSet moves2;
  // payoff[i * |moves2| + j] = (payoff to player 1, payoff to player 2)
  std::vector<std::array<double, 2>> payoff;
};

Bimatrix PrisonersDilemma(double temptation = 5, double reward = 3,
                          double punishment = 1, double sucker = 0);
Bimatrix MatchingPennies();

// Two argmax decisions side by side: (1, R^2) -> (Y1 x Y2, R^2) whose
// equilibria at k are the pure Nash profiles of the normal form y -> k(y).
CoutilityFreeGame BimatrixGame(const Bimatrix& m);
// Stage payoffs as values of R^2, in profile order.
std::vector<Value> BimatrixPayoffs(const Bimatrix& m);
Continuation BimatrixContinuation(const Bimatrix& m);

// Sigma = Y, identity play, E always true (all = true) or always false.
CoutilityFreeGame TrivialGame(const FinSet& moves, const ValueSet& utilities,
                              bool all);

// Named repeated-game strategies over the stage moves `moves`. Stage
// strategies are indices into the stage game's strategy set; out-of-range
// references throw kUnknownMove.
StrategyTransducer AllConstant(const FinSet& moves, std::size_t strategies,
                               Index stage);
// Plays `cooperate` until a move in `triggers` is observed, then `punish`
// forever.
StrategyTransducer GrimTrigger(const FinSet& moves, std::size_t strategies,
                               Index cooperate, Index punish,
                               const std::vector<Index>& triggers);
// Plays `start`, then echo[y] after observing y; minimized, so it has one
// state per distinguishable observation.
StrategyTransducer TitForTat(const FinSet& moves, std::size_t strategies,
                             Index start, const std::vector<Index>& echo);
// For a square bimatrix: after (a, b) each player copies the other, (b, a).
std::vector<Index> SwappedProfileEcho(const Bimatrix& m);
StrategyTransducer DepthTableStrategy(const DepthTable& table,
                                      const FinSet& moves);

}  // namespace opengames

#endif  // OPENGAMES_GAME_LIBRARY_HPP_
