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

#ifndef OPENGAMES_COALGEBRA_HPP_
#define OPENGAMES_COALGEBRA_HPP_

#include <cstddef>
#include <vector>

#include "opengames/iteration.hpp"
#include "opengames/transducer.hpp"
#include "opengames/two_cells.hpp"
#include "opengames/utility.hpp"

namespace opengames {

// A game H with a candidate structure map H -> F_G(H):
//   now[s]            stage strategy chosen by s
//   ltr[s * |Y| + y]  strategy of H after stage move y
//   hd[z]             first stage move of the outcome z
//   tl[z]             remaining outcome
struct FiniteCoalgebra {
  CoutilityFreeGame h;
  std::vector<Index> now;
  std::vector<Index> ltr;
  std::vector<Index> hd;
  std::vector<Index> tl;
};

// Table sizes and ranges against the stage game; throws kSchemaError.
void ValidateShape(const IteratedGame& g, const FiniteCoalgebra& c);

// (<now, ltr>, <hd, tl>) as a pair of index maps H -> F_G(H).
GameMorphism StructureMap(const IteratedGame& g, const FiniteCoalgebra& c);

// Whether the structure map is a morphism H -> F_G(H). Exhaustive over
// continuations for finite R, otherwise over options.sample.
MorphismCheck CheckCoalgebra(const IteratedGame& g, const FiniteCoalgebra& c,
                             const MorphismCheckOptions& options = {});

// The outcome stream of z: hd z, hd (tl z), ...
Lasso UnfoldedStream(const FiniteCoalgebra& c, Index z);
// The iterated-game strategy of s as a machine over the states of H.
StrategyTransducer UnfoldedStrategy(const IteratedGame& g,
                                    const FiniteCoalgebra& c, Index s);

// z -> k(unfolded stream of z), a continuation for H.
Continuation UnfoldedContinuation(const FiniteCoalgebra& c,
                                  const UtilityFunctional& k);
// (y, z) -> k(y :: unfolded stream of z), a continuation for F_G(H).
Continuation TransportedContinuation(const IteratedGame& g,
                                     const FiniteCoalgebra& c,
                                     const UtilityFunctional& k);

enum class UnfoldOrder { kBreadthFirst, kDepthFirst };

// Depth-d truncations of the unique maps into the final coalgebras.
struct Unfolding {
  std::vector<DepthTable> sigma;  // one per strategy of H
  std::vector<StreamPrefix> y;    // one per move of H

  friend bool operator==(const Unfolding&, const Unfolding&) = default;
};

// Throws kEnumerationTooLarge when |Y|^{<d} exceeds the guard.
Unfolding UnfoldCoalgebra(const IteratedGame& g, const FiniteCoalgebra& c,
                          std::size_t depth,
                          UnfoldOrder order = UnfoldOrder::kBreadthFirst,
                          std::size_t guard = kDefaultEnumerationGuard);

// Some strategy s of H unfolds to `sigma` on every history shorter than
// `depth` and is an equilibrium of H against z -> k(unfolded stream of z).
bool EhatMembership(const IteratedGame& g, const FiniteCoalgebra& c,
                    const DepthTable& sigma, const UtilityFunctional& k,
                    std::size_t depth, double tolerance = kDefaultTolerance);
bool EhatMembership(const IteratedGame& g, const FiniteCoalgebra& c,
                    const StrategyTransducer& sigma,
                    const UtilityFunctional& k, std::size_t depth,
                    double tolerance = kDefaultTolerance);

}  // namespace opengames

#endif  // OPENGAMES_COALGEBRA_HPP_
