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

#include "opengames/transducer.hpp"

#include <deque>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "opengames/error.hpp"

namespace opengames {

StrategyTransducer::StrategyTransducer(FinSet states, Index initial,
                                       std::vector<Index> stage,
                                       std::vector<Index> step,
                                       std::size_t moves) {
  if (moves == 0) Fail(ErrorKind::kEmptyMoveSet, "transducer over no moves");
  const std::size_t n = states.size();
  if (n == 0) Fail(ErrorKind::kSchemaError, "transducer needs a state");
  if (initial >= n) Fail(ErrorKind::kSchemaError, "initial state out of range");
  if (stage.size() != n || step.size() != n * moves) {
    Fail(ErrorKind::kSchemaError, "stage/step tables must be total");
  }
  for (Index q : step) {
    if (q >= n) Fail(ErrorKind::kSchemaError, "step names an unknown state");
  }

  std::vector<char> reachable(n, 0);
  std::deque<Index> queue{initial};
  reachable[initial] = 1;
  while (!queue.empty()) {
    const Index q = queue.front();
    queue.pop_front();
    for (Index y = 0; y < moves; ++y) {
      const Index next = step[q * moves + y];
      if (!reachable[next]) {
        reachable[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<Index> renumber(n, 0);
  std::vector<std::string> labels;
  for (Index q = 0; q < n; ++q) {
    if (reachable[q]) {
      renumber[q] = labels.size();
      labels.push_back(states.label(q));
    }
  }
  moves_ = moves;
  initial_ = renumber[initial];
  if (labels.size() == n) {
    states_ = std::move(states);
    stage_ = std::move(stage);
    step_ = std::move(step);
    return;
  }
  states_ = FinSet(std::move(labels));
  for (Index q = 0; q < n; ++q) {
    if (!reachable[q]) continue;
    stage_.push_back(stage[q]);
    for (Index y = 0; y < moves; ++y) {
      step_.push_back(renumber[step[q * moves + y]]);
    }
  }
}

Index StrategyTransducer::Run(Index from, std::span<const Index> history) const {
  Index q = from;
  for (Index y : history) {
    if (y >= moves_) Fail(ErrorKind::kUnknownMove, "history move out of range");
    q = step(q, y);
  }
  return q;
}

StrategyTransducer StrategyTransducer::Rerooted(Index q) const {
  if (q >= num_states()) Fail(ErrorKind::kInvalidArgument, "no such state");
  return StrategyTransducer(states_, q, stage_, step_, moves_);
}

StrategyTransducer StrategyTransducer::Minimized() const {
  const std::size_t n = num_states();
  std::vector<Index> block(n);
  std::size_t blocks = 0;
  {
    std::map<Index, Index> by_stage;
    for (Index q = 0; q < n; ++q) {
      auto [it, fresh] = by_stage.emplace(stage_[q], by_stage.size());
      block[q] = it->second;
    }
    blocks = by_stage.size();
  }
  // Blocks are numbered by first appearance in state order, so block b's
  // lowest member is the b-th representative.
  while (true) {
    std::map<std::vector<Index>, Index> by_signature;
    std::vector<Index> refined(n);
    for (Index q = 0; q < n; ++q) {
      std::vector<Index> signature{block[q]};
      for (Index y = 0; y < moves_; ++y) signature.push_back(block[step(q, y)]);
      auto [it, fresh] = by_signature.emplace(std::move(signature),
                                              by_signature.size());
      refined[q] = it->second;
    }
    const bool stable = by_signature.size() == blocks;
    block = std::move(refined);
    blocks = by_signature.size();
    if (stable) break;
  }
  std::vector<Index> representative(blocks, n);
  for (Index q = 0; q < n; ++q) {
    if (representative[block[q]] == n) representative[block[q]] = q;
  }
  std::vector<std::string> labels;
  std::vector<Index> stage;
  std::vector<Index> step;
  for (Index b = 0; b < blocks; ++b) {
    const Index q = representative[b];
    labels.push_back(states_.label(q));
    stage.push_back(stage_[q]);
    for (Index y = 0; y < moves_; ++y) step.push_back(block[this->step(q, y)]);
  }
  return StrategyTransducer(FinSet(std::move(labels)), block[initial_],
                            std::move(stage), std::move(step), moves_);
}

bool SameStrategy(const StrategyTransducer& a, const StrategyTransducer& b,
                  std::optional<std::size_t> depth) {
  if (a.num_moves() != b.num_moves()) {
    Fail(ErrorKind::kInvalidArgument, "machines read different move sets");
  }
  if (depth && *depth == 0) return true;
  std::set<std::pair<Index, Index>> seen{{a.initial(), b.initial()}};
  std::vector<std::pair<Index, Index>> level{{a.initial(), b.initial()}};
  for (std::size_t length = 0; !level.empty(); ++length) {
    std::vector<std::pair<Index, Index>> next;
    for (auto [qa, qb] : level) {
      if (a.stage(qa) != b.stage(qb)) return false;
      if (depth && length + 1 >= *depth) continue;
      for (Index y = 0; y < a.num_moves(); ++y) {
        std::pair<Index, Index> succ{a.step(qa, y), b.step(qb, y)};
        if (seen.insert(succ).second) next.push_back(succ);
      }
    }
    level = std::move(next);
  }
  return true;
}

std::optional<std::size_t> HistoryCount(std::size_t moves, std::size_t depth,
                                        std::size_t cap) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t length = 0; length < depth; ++length) {
    if (level > cap - total) return std::nullopt;
    total += level;
    if (length + 1 < depth) {
      if (moves != 0 && level > cap / moves) {
        // The next level alone exceeds the cap.
        return std::nullopt;
      }
      level *= moves;
    }
  }
  return total;
}

std::size_t HistoryIndex(std::span<const Index> history, std::size_t moves) {
  std::size_t offset = 0;
  std::size_t level = 1;
  for (std::size_t i = 0; i < history.size(); ++i) {
    offset += level;
    level *= moves;
  }
  std::size_t code = 0;
  for (Index y : history) code = code * moves + y;
  return offset + code;
}

DepthTable::DepthTable(std::size_t moves, std::size_t depth,
                       std::vector<Index> table, Index fallback)
    : moves_(moves), depth_(depth), table_(std::move(table)),
      fallback_(fallback) {
  if (moves == 0) Fail(ErrorKind::kEmptyMoveSet, "depth table over no moves");
  auto count =
      HistoryCount(moves, depth, std::numeric_limits<std::size_t>::max());
  if (!count || *count != table_.size()) {
    Fail(ErrorKind::kSchemaError,
         "depth table must have one entry per history shorter than its depth");
  }
}

DepthTable DepthTable::FromTransducer(const StrategyTransducer& t,
                                      std::size_t depth, std::size_t guard) {
  const std::size_t m = t.num_moves();
  if (!HistoryCount(m, depth, guard)) {
    Fail(ErrorKind::kEnumerationTooLarge,
         "depth table exceeds the enumeration guard");
  }
  std::vector<Index> table;
  std::vector<Index> level{t.initial()};
  for (std::size_t length = 0; length < depth; ++length) {
    std::vector<Index> next;
    if (length + 1 < depth) next.reserve(level.size() * m);
    for (Index q : level) {
      table.push_back(t.stage(q));
      if (length + 1 < depth) {
        for (Index y = 0; y < m; ++y) next.push_back(t.step(q, y));
      }
    }
    level = std::move(next);
  }
  return DepthTable(m, depth, std::move(table), t.stage(t.initial()));
}

Index DepthTable::At(std::span<const Index> history) const {
  for (Index y : history) {
    if (y >= moves_) Fail(ErrorKind::kUnknownMove, "history move out of range");
  }
  if (history.size() >= depth_) return fallback_;
  return table_[HistoryIndex(history, moves_)];
}

DepthTable DepthTable::Rerooted(Index y) const {
  if (y >= moves_) Fail(ErrorKind::kUnknownMove, "move out of range");
  if (depth_ == 0) return *this;
  std::vector<Index> table;
  std::size_t level = 1;       // moves^length
  std::size_t offset_next = 1;  // position of level length + 1
  for (std::size_t length = 0; length + 1 < depth_; ++length) {
    const std::size_t base = offset_next + y * level;
    for (std::size_t c = 0; c < level; ++c) table.push_back(table_[base + c]);
    offset_next += level * moves_;
    level *= moves_;
  }
  return DepthTable(moves_, depth_ - 1, std::move(table), fallback_);
}

StrategyTransducer DepthTable::ToTransducer(const FinSet& moves) const {
  if (moves.size() != moves_) {
    Fail(ErrorKind::kInvalidArgument, "move set size differs from the table");
  }
  const std::size_t n = table_.size();
  const Index sink = n;
  std::vector<std::string> labels;
  std::vector<Index> stage = table_;
  std::vector<Index> step;
  step.reserve((n + 1) * moves_);
  std::size_t level = 1;
  std::size_t offset = 0;
  for (std::size_t length = 0; length < depth_; ++length) {
    const std::size_t next_offset = offset + level;
    for (std::size_t c = 0; c < level; ++c) {
      for (Index y = 0; y < moves_; ++y) {
        step.push_back(length + 1 < depth_ ? next_offset + c * moves_ + y
                                           : sink);
      }
      if (length == 0) {
        labels.push_back("ε");
      } else {
        const std::string& parent = labels[offset - level / moves_ + c / moves_];
        const std::string& move = moves.label(c % moves_);
        labels.push_back(length == 1 ? move : parent + "." + move);
      }
    }
    offset = next_offset;
    level *= moves_;
  }
  labels.push_back("⊥");
  stage.push_back(fallback_);
  for (Index y = 0; y < moves_; ++y) step.push_back(sink);
  FinSet states;
  try {
    states = FinSet(labels);
  } catch (const Error&) {
    states = FinSet::Range("h", labels.size());
  }
  return StrategyTransducer(std::move(states), depth_ > 0 ? 0 : sink,
                            std::move(stage), std::move(step), moves_);
}

bool SameToDepth(const DepthTable& a, const DepthTable& b, std::size_t depth) {
  if (a.num_moves() != b.num_moves()) {
    Fail(ErrorKind::kInvalidArgument, "tables read different move sets");
  }
  std::size_t index = 0;
  std::size_t level = 1;
  for (std::size_t length = 0; length < depth; ++length) {
    for (std::size_t c = 0; c < level; ++c, ++index) {
      const Index ea = length < a.depth() ? a.table()[index] : a.fallback();
      const Index eb = length < b.depth() ? b.table()[index] : b.fallback();
      if (ea != eb) return false;
    }
    if (length >= a.depth() && length >= b.depth()) break;
    level *= a.num_moves();
  }
  return true;
}

}  // namespace opengames
