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

#ifndef OPENGAMES_ITERATION_HPP_
#define OPENGAMES_ITERATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opengames/transducer.hpp"
#include "opengames/two_cells.hpp"
#include "opengames/utility.hpp"

namespace opengames {

enum class VerdictStatus { kHolds, kFails, kUnknown };
std::string_view VerdictStatusName(VerdictStatus status);

struct Witness {
  StreamPrefix history;
  // A stage profile that improves on the strategy's choice at `history`,
  // when the stage game can name one.
  std::optional<Index> deviation;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::kHolds;
  // Always present for kFails: the (length, lexicographic)-least failing
  // history.
  std::optional<Witness> witness;
  // Number of history levels checked; nullopt for the exact procedure,
  // which covers every history.
  std::optional<std::size_t> depth_checked;
  double tolerance = kDefaultTolerance;
  // Some comparison landed within `tolerance` of a tie.
  bool marginal = false;
  // The utility is only an approximation of the intended one.
  bool approximate = false;
  std::vector<std::string> warnings;
  std::size_t nodes_checked = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Eventually periodic stream prefix . cycle^omega.
struct Lasso {
  StreamPrefix prefix;
  StreamPrefix cycle;

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

struct PhiOptions {
  double tolerance = kDefaultTolerance;
  // Cap on history nodes when the stage game does not let histories with
  // the same machine state be merged; exceeding it yields kUnknown.
  std::size_t node_budget = std::size_t{1} << 22;
};

// The omega-iteration of a stage game: strategies are finite-memory
// transducers (or bounded-depth tables) over the stage moves, plays are move
// streams, and equilibria are decided against discounted, finite-horizon or
// mean-payoff utilities.
class IteratedGame {
 public:
  // Throws kEmptyMoveSet when the stage game has no moves or no strategies.
  explicit IteratedGame(CoutilityFreeGame stage);

  const CoutilityFreeGame& stage() const { return stage_; }
  const FinSet& moves() const { return stage_.moves(); }

  // Throws kSchemaError unless the machine reads the stage moves and emits
  // stage strategies.
  void Validate(const StrategyTransducer& t) const;
  void Validate(const DepthTable& t) const;

  // First d moves of the self-play stream.
  StreamPrefix PlayStream(const StrategyTransducer& t, std::size_t d) const;
  StreamPrefix PlayStream(const DepthTable& t, std::size_t d) const;
  // The whole self-play stream of the machine started in `from`.
  Lasso PlayLasso(const StrategyTransducer& t, Index from) const;
  Lasso PlayLasso(const StrategyTransducer& t) const {
    return PlayLasso(t, t.initial());
  }

  // Coalgebra structure: current stage strategy and the strategy after y.
  Index Now(const StrategyTransducer& t) const;
  StrategyTransducer Ltr(const StrategyTransducer& t, Index y) const;

  // Membership in the depth-d approximant of the equilibrium predicate:
  // at every history shorter than d (all branches, not only the played
  // one), the stage strategy must be an equilibrium of the stage game
  // against y -> k_h(y :: play of the machine after y), with k_h = k shifted
  // by the history. kFails refutes membership in the greatest fixpoint;
  // kHolds only certifies the approximant.
  Verdict PhiCheck(const StrategyTransducer& t, const UtilityFunctional& k,
                   std::size_t depth, const PhiOptions& options = {}) const;
  Verdict PhiCheck(const DepthTable& t, const UtilityFunctional& k,
                   std::size_t depth, const PhiOptions& options = {}) const;

  // Exact membership for discounted k when the stage equilibrium is
  // invariant under positive affine maps: one stage check per machine
  // state against y -> k(y :: play after y). Throws kNotAffineInvariant and
  // kUnsupportedUtility when those preconditions fail.
  Verdict GfpMembershipExact(const StrategyTransducer& t,
                             const UtilityFunctional& k,
                             double tolerance = kDefaultTolerance) const;

 private:
  CoutilityFreeGame stage_;
};

IteratedGame IterateGame(const CoutilityFreeGame& stage);

// Throws kInvalidArgument on an empty prefix.
Index Hd(const StreamPrefix& w);
StreamPrefix Tl(const StreamPrefix& w);

// Each call yields the next move of a stream.
using StreamGenerator = std::function<Index()>;

StreamGenerator PrefixGenerator(StreamPrefix w);
StreamGenerator LassoGenerator(Lasso lasso);
// The corecursive self-play of a machine: emit P(stage(q)), feed it back.
StreamGenerator PlayGenerator(const IteratedGame& g,
                              const StrategyTransducer& t);

// Steps both streams `depth` times; returns the first position where their
// heads differ, or nullopt if they agree throughout.
std::optional<std::size_t> BisimCheck(StreamGenerator a, StreamGenerator b,
                                      std::size_t depth);

}  // namespace opengames

#endif  // OPENGAMES_ITERATION_HPP_
