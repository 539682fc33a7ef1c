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

#ifndef OPENGAMES_TRANSDUCER_HPP_
#define OPENGAMES_TRANSDUCER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opengames/finset.hpp"
#include "opengames/utility.hpp"

namespace opengames {

// A finite-memory repeated-game strategy: a Moore machine reading observed
// moves and emitting stage strategies. The strategy it denotes maps a
// history w to stage(step*(initial, w)).
class StrategyTransducer {
 public:
  // step[q * moves + y] is the successor of q on y. States unreachable from
  // `initial` are dropped (the survivors keep their relative order), so
  // state indices of the result may differ from the input's.
  StrategyTransducer(FinSet states, Index initial, std::vector<Index> stage,
                     std::vector<Index> step, std::size_t moves);

  const FinSet& states() const { return states_; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_moves() const { return moves_; }
  Index initial() const { return initial_; }
  Index stage(Index q) const { return stage_[q]; }
  Index step(Index q, Index y) const { return step_[q * moves_ + y]; }
  const std::vector<Index>& stage_table() const { return stage_; }
  const std::vector<Index>& step_table() const { return step_; }

  // State reached from `from` after reading the history.
  Index Run(std::span<const Index> history) const { return Run(initial_, history); }
  Index Run(Index from, std::span<const Index> history) const;
  Index StageAt(std::span<const Index> history) const {
    return stage_[Run(history)];
  }

  // The same machine started in q (then pruned).
  StrategyTransducer Rerooted(Index q) const;
  // Smallest equivalent machine (Moore partition refinement). Each block is
  // represented by its lowest-indexed member, whose label it keeps.
  StrategyTransducer Minimized() const;

  friend bool operator==(const StrategyTransducer&,
                         const StrategyTransducer&) = default;

 private:
  FinSet states_;
  std::size_t moves_ = 0;
  Index initial_ = 0;
  std::vector<Index> stage_;
  std::vector<Index> step_;
};

// True iff the two machines emit the same stage strategy on every history
// of length < depth (nullopt: every history).
bool SameStrategy(const StrategyTransducer& a, const StrategyTransducer& b,
                  std::optional<std::size_t> depth = std::nullopt);

// Number of histories of length < depth over `moves` letters, or nullopt
// above cap.
std::optional<std::size_t> HistoryCount(std::size_t moves, std::size_t depth,
                                        std::size_t cap);

// Position of a history (length < depth) in a DepthTable: histories are laid
// out level by level, each level in lexicographic order.
std::size_t HistoryIndex(std::span<const Index> history, std::size_t moves);

// A bounded-depth strategy: an explicit table on histories shorter than
// `depth` and a fallback stage strategy for everything longer.
class DepthTable {
 public:
  DepthTable(std::size_t moves, std::size_t depth, std::vector<Index> table,
             Index fallback);

  // Samples a machine on every history of length < depth; the fallback is
  // stage(initial). Throws kEnumerationTooLarge above `guard` entries.
  static DepthTable FromTransducer(const StrategyTransducer& t,
                                   std::size_t depth,
                                   std::size_t guard = kDefaultEnumerationGuard);

  std::size_t num_moves() const { return moves_; }
  std::size_t depth() const { return depth_; }
  Index fallback() const { return fallback_; }
  const std::vector<Index>& table() const { return table_; }

  Index At(std::span<const Index> history) const;
  // History-indexed view of the subtree below y: depth decreases by one.
  DepthTable Rerooted(Index y) const;
  // States: one per history of length < depth (label "ε" for the root,
  // move labels joined by '.' otherwise) plus a sink "⊥" that emits the
  // fallback once the table is exhausted.
  StrategyTransducer ToTransducer(const FinSet& moves) const;

  friend bool operator==(const DepthTable&, const DepthTable&) = default;

 private:
  std::size_t moves_ = 0;
  std::size_t depth_ = 0;
  std::vector<Index> table_;
  Index fallback_ = 0;
};

// Agreement of two bounded-depth strategies on all histories of length
// < depth.
bool SameToDepth(const DepthTable& a, const DepthTable& b, std::size_t depth);

}  // namespace opengames

#endif  // OPENGAMES_TRANSDUCER_HPP_
