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

// Single-threaded versions of the parallel kernels. They return exactly what
// the parallel versions return and exist for tests and benchmarks.

#ifndef OPENGAMES_REFERENCE_HPP_
#define OPENGAMES_REFERENCE_HPP_

#include <vector>

#include "opengames/open_game.hpp"

namespace opengames {

class IteratedGame;
class StrategyTransducer;
class UtilityFunctional;
struct GameMorphism;
struct MorphismCheck;
struct MorphismCheckOptions;
struct PhiOptions;
struct Verdict;

namespace reference {

std::vector<Index> EquilibriumSet(const OpenGame& g, Index x,
                                  const Continuation& k,
                                  double tolerance = kDefaultTolerance);

MorphismCheck CheckMorphism(const GameMorphism& alpha, const OpenGame& g,
                            const OpenGame& g2,
                            const MorphismCheckOptions& options);

Verdict PhiCheck(const IteratedGame& g, const StrategyTransducer& t,
                 const UtilityFunctional& k, std::size_t depth,
                 const PhiOptions& options);

Verdict GfpMembershipExact(const IteratedGame& g, const StrategyTransducer& t,
                           const UtilityFunctional& k,
                           double tolerance = kDefaultTolerance);

}  // namespace reference
}  // namespace opengames

#endif  // OPENGAMES_REFERENCE_HPP_
