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

#ifndef OPENGAMES_OPEN_GAME_HPP_
#define OPENGAMES_OPEN_GAME_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opengames/continuation.hpp"
#include "opengames/finset.hpp"
#include "opengames/value_set.hpp"

namespace opengames {

inline constexpr double kDefaultTolerance = 1e-9;

// One side of a game's boundary: (X, S) on the domain, (Y, R) on the
// codomain.
struct Boundary {
  FinSet points;
  ValueSet values;

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

// Best unilateral improvement available against a continuation, as reported
// by stage games that know their decision-makers (argmax agents and their
// tensors). `gain` <= 0 means no strict improvement exists.
struct DeviationProbe {
  double gain = 0.0;
  std::optional<Index> deviation;
};

using CoutilityFn =
    std::function<Value(Index sigma, Index x, std::span<const double> r)>;
using EquilibriumFn = std::function<bool(Index x, const Continuation& k,
                                         Index sigma, double tolerance)>;
using DeviationFn =
    std::function<DeviationProbe(Index x, const Continuation& k, Index sigma)>;

struct GameTraits {
  // C(sigma, x, r) = r, with S = R.
  bool passthrough_coutility = false;
  // E(x, k) is unchanged when k is mapped through x -> a*x + b with a > 0
  // per coordinate.
  bool affine_invariant = false;
  // Name of the library equilibrium this game was built with ("argmax",
  // "all", "none"); empty for composites and tables.
  std::string builtin;
};

// A finite open game (X, S) -> (Y, R): strategies, a play table
// Sigma x X -> Y, a coutility function and an equilibrium decision
// procedure. Immutable; copies share state.
class OpenGame {
 public:
  OpenGame(Boundary dom, Boundary cod, FinSet strategies,
           std::vector<Index> play, CoutilityFn coutility,
           EquilibriumFn equilibrium, GameTraits traits = {},
           DeviationFn deviation = {});

  const Boundary& dom() const { return impl_->dom; }
  const Boundary& cod() const { return impl_->cod; }
  const FinSet& strategies() const { return impl_->strategies; }
  const GameTraits& traits() const { return impl_->traits; }

  Index Play(Index sigma, Index x) const {
    return impl_->play[sigma * impl_->dom.points.size() + x];
  }
  Value Coutility(Index sigma, Index x, std::span<const double> r) const;
  // sigma in E(x, k). Tolerance is consumed by numeric equilibria only.
  bool Equilibrium(Index x, const Continuation& k, Index sigma,
                   double tolerance = kDefaultTolerance) const;
  bool has_deviation_probe() const { return bool(impl_->deviation); }
  std::optional<DeviationProbe> Deviation(Index x, const Continuation& k,
                                          Index sigma) const;

  // Same game with the state set replaced by an equinumerous relabelling.
  OpenGame WithStates(FinSet states) const;

 private:
  struct Impl {
    Boundary dom;
    Boundary cod;
    FinSet strategies;
    std::vector<Index> play;
    CoutilityFn coutility;
    EquilibriumFn equilibrium;
    GameTraits traits;
    DeviationFn deviation;
  };
  std::shared_ptr<const Impl> impl_;
};

// C(sigma, x, r) = r.
CoutilityFn PassthroughCoutility();

// (X, S) -> (X, S) with one strategy "•", identity play and coutility, and
// an always-true equilibrium.
OpenGame IdentityGame(const FinSet& states, const ValueSet& coutilities);
// Identity on (1, 1): the monoidal unit.
OpenGame UnitGame();

// Sequential composition h . g; throws kBoundaryMismatch unless
// cod(g) == dom(h). Strategy (i, j) is index i * |Sigma_h| + j.
OpenGame Compose(const OpenGame& g, const OpenGame& h);

// Parallel product g (x) h. Strategy (i, j) is index i * |Sigma_h| + j.
OpenGame Tensor(const OpenGame& g, const OpenGame& h);

// {sigma | sigma in E(x, k)} in strategy order. Runs in parallel over the
// strategy set.
std::vector<Index> EquilibriumSet(const OpenGame& g, Index x,
                                  const Continuation& k,
                                  double tolerance = kDefaultTolerance);

// Tables for a fully explicit game over finite carriers.
//   coutility[(sigma * |X| + x) * |R| + r] = s
//   equilibrium[(x * |R|^|Y| + kcode) * |Sigma| + sigma], kcode as in
//   Continuation::Enumerated.
struct GameTables {
  std::vector<Index> play;
  std::vector<Index> coutility;
  std::vector<char> equilibrium;
};

OpenGame TabulatedGame(Boundary dom, Boundary cod, FinSet strategies,
                       GameTables tables);

// Lexicographic code of a continuation whose rows all lie in `carrier`.
std::size_t ContinuationCode(const ValueSet& carrier, const Continuation& k);

// Materializes a game over finite carriers into tables; throws
// kEnumerationTooLarge if |X| * |R|^|Y| * |Sigma| exceeds `guard`.
GameTables Tabulate(const OpenGame& g,
                    std::size_t guard = kDefaultEnumerationGuard);

}  // namespace opengames

#endif  // OPENGAMES_OPEN_GAME_HPP_
