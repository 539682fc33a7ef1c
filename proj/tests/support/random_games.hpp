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

// Generators for property tests.

#ifndef OPENGAMES_TESTS_SUPPORT_RANDOM_GAMES_HPP_
#define OPENGAMES_TESTS_SUPPORT_RANDOM_GAMES_HPP_

#include <string_view>
#include <vector>

#include "opengames/coalgebra.hpp"
#include "opengames/iteration.hpp"
#include "opengames/open_game.hpp"
#include "opengames/transducer.hpp"
#include "opengames/two_cells.hpp"
#include "opengames/utility.hpp"
#include "support/seed.hpp"

namespace opengames::testing {

std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi);
double UniformReal(Rng& rng, double lo, double hi);

// Points labelled <prefix>0.. and an indexed finite carrier <prefix>r0..
Boundary RandomBoundary(Rng& rng, std::string_view prefix, std::size_t max);

struct TableGame {
  OpenGame game;
  GameTables tables;
};
// Random play, coutility and equilibrium tables; each (x, k, sigma) is an
// equilibrium with probability `density`.
TableGame RandomTableGame(Rng& rng, const Boundary& dom, const Boundary& cod,
                          std::size_t strategies, double density = 0.5);

// X = 1, S = R, pass-through coutility, random equilibrium table.
CoutilityFreeGame RandomCoutilityFreeGame(Rng& rng, const FinSet& moves,
                                          const ValueSet& utilities,
                                          std::size_t strategies,
                                          double density = 0.5);

// One decision-maker over `moves` with utilities in a finite numeric
// carrier: Sigma = Y, identity play, argmax equilibrium.
CoutilityFreeGame FiniteArgmaxGame(const FinSet& moves, const ValueSet& r);

// Scalar argmax over the reals without the affine-invariance flag.
CoutilityFreeGame UnflaggedArgmax(const FinSet& moves);

StrategyTransducer RandomTransducer(Rng& rng, std::size_t states,
                                    std::size_t moves, std::size_t strategies);

// Payoffs in [-5, 5]; delta in [delta_lo, delta_hi] for discounted kinds.
UtilityFunctional RandomUtility(Rng& rng, const FinSet& moves, std::size_t dim,
                                UtilityKind kind, double delta_lo = 0.05,
                                double delta_hi = 0.95);

// H-native one-deviation equilibrium over a coalgebra with Y_H = Sigma_H,
// P_H = id, hd(s) = P_G(now s), tl(s) = ltr(s, hd s): sigma is optimal at k
// when every state s reachable from sigma plays a stage equilibrium against
// y -> k(t), with t the least state satisfying hd t = y, tl t = ltr(s, y).
// When no such t exists sigma is not optimal.
FiniteCoalgebra CanonicalCoalgebra(const IteratedGame& g,
                                   std::vector<Index> now,
                                   std::vector<Index> ltr);

// factored: Sigma_H = Sigma_G x M and ltr ignores the current stage
// strategy, which guarantees the points t above exist. Otherwise now and ltr
// are uniform. |Sigma_H| <= max_states.
FiniteCoalgebra RandomCoalgebra(Rng& rng, const IteratedGame& g,
                                std::size_t max_states, bool factored);

// Continuations y, z -> K(y :: unf_Y z) for random discounted K.
std::vector<Continuation> TransportedSample(Rng& rng, const IteratedGame& g,
                                            const FiniteCoalgebra& c,
                                            std::size_t count);

}  // namespace opengames::testing

#endif  // OPENGAMES_TESTS_SUPPORT_RANDOM_GAMES_HPP_
