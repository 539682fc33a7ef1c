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

#ifndef OPENGAMES_TWO_CELLS_HPP_
#define OPENGAMES_TWO_CELLS_HPP_

#include <optional>
#include <vector>

#include "opengames/continuation.hpp"
#include "opengames/open_game.hpp"

namespace opengames {

// A game (1, R) -> (Y, R) whose coutility passes utilities straight back.
// These are the objects morphisms and the iteration functor act on.
class CoutilityFreeGame {
 public:
  // Throws kSchemaError unless X has one element, S = R and C(sigma, *, r) = r
  // (checked on every element of a finite R, on probe vectors otherwise).
  explicit CoutilityFreeGame(OpenGame game);

  const OpenGame& game() const { return game_; }
  const FinSet& moves() const { return game_.cod().points; }
  const ValueSet& utilities() const { return game_.cod().values; }
  const FinSet& strategies() const { return game_.strategies(); }

  Index Play(Index sigma) const { return game_.Play(sigma, 0); }
  bool Equilibrium(const Continuation& k, Index sigma,
                   double tolerance = kDefaultTolerance) const {
    return game_.Equilibrium(0, k, sigma, tolerance);
  }

 private:
  OpenGame game_;
};

// A pair (alpha_Y : Y -> Y', alpha_Sigma : Sigma -> Sigma'). Whether it is a
// morphism between two particular games is decided by CheckMorphism.
struct GameMorphism {
  std::vector<Index> alpha_y;
  std::vector<Index> alpha_sigma;

  friend bool operator==(const GameMorphism&, const GameMorphism&) = default;
};

GameMorphism IdentityMorphism(const OpenGame& g);
// beta . alpha
GameMorphism ComposeMorphisms(const GameMorphism& beta,
                              const GameMorphism& alpha);

struct MorphismCheckOptions {
  // Upper bound on |R|^|Y'| for exhaustive enumeration.
  std::size_t guard = kDefaultEnumerationGuard;
  // When set, these continuations over Y' replace exhaustive enumeration and
  // the result is labelled sampled.
  std::optional<std::vector<Continuation>> sample;
  double tolerance = kDefaultTolerance;
};

enum class MorphismCondition { kPlay, kEquilibrium };

struct MorphismCounterexample {
  MorphismCondition condition = MorphismCondition::kPlay;
  Index sigma = 0;
  Index state = 0;
  // kEquilibrium only: the continuation k : Y' -> R and its position in the
  // enumeration (or the sample).
  std::optional<Continuation> k;
  std::size_t k_index = 0;
};

struct MorphismCheck {
  bool passed = true;
  bool sampled = false;
  std::size_t continuations_checked = 0;
  std::optional<MorphismCounterexample> counterexample;
};

// Checks (i) alpha_Y(P(sigma, x)) = P'(alpha_Sigma sigma, x) for every sigma
// and x, and (ii) sigma in E(x, k . alpha_Y) implies alpha_Sigma(sigma) in
// E'(x, k) for every sigma, x and k : Y' -> R. The two games must share
// their state set and utilities. Continuations are enumerated
// lexicographically (move order, then carrier order); the reported
// counterexample is the first in (sigma, x, k) order regardless of thread
// count. Throws kEnumerationTooLarge when R is not enumerable within the
// guard and no sample is given.
MorphismCheck CheckMorphism(const GameMorphism& alpha, const OpenGame& g,
                            const OpenGame& g2,
                            const MorphismCheckOptions& options = {});
MorphismCheck CheckMorphism(const GameMorphism& alpha,
                            const CoutilityFreeGame& g,
                            const CoutilityFreeGame& g2,
                            const MorphismCheckOptions& options = {});

// F_G(h) = (Y -> h) . g, a coutility-free game (1, R) -> (Y x Y_H, R) with
// strategies Sigma_G x (Y -> Sigma_H). Throws kBoundaryMismatch when g and h
// have different utilities.
CoutilityFreeGame FgObject(const CoutilityFreeGame& g,
                           const CoutilityFreeGame& h,
                           std::size_t guard = kDefaultEnumerationGuard);

// Strategy (sigma, f) of F_G(h) as an index, and back.
Index EncodeFgStrategy(Index sigma, const std::vector<Index>& f,
                       std::size_t inner_strategies);
std::pair<Index, std::vector<Index>> DecodeFgStrategy(
    Index code, std::size_t moves, std::size_t inner_strategies);

// F_G(alpha) : F_G(h) -> F_G(h2), (sigma, f) -> (sigma, alpha_Sigma . f) and
// (y, z) -> (y, alpha_Y z). alpha is verified first (kInvalidMorphism).
GameMorphism FgMorphism(const CoutilityFreeGame& g, const GameMorphism& alpha,
                        const CoutilityFreeGame& h,
                        const CoutilityFreeGame& h2,
                        const MorphismCheckOptions& options = {});

}  // namespace opengames

#endif  // OPENGAMES_TWO_CELLS_HPP_
