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

#include "opengames/game_library.hpp"

#include <cmath>
#include <limits>

#include "opengames/error.hpp"

namespace opengames {

EquilibriumFn ArgmaxEquilibrium(std::vector<Index> play, std::size_t states,
                                std::size_t strategies) {
  return [play = std::move(play), states, strategies](
             Index x, const Continuation& k, Index sigma, double tol) {
    if (k.dim() != 1) {
      Fail(ErrorKind::kInvalidArgument, "argmax needs scalar utilities");
    }
    const double mine = k[play[sigma * states + x]][0];
    for (Index other = 0; other < strategies; ++other) {
      if (mine < k[play[other * states + x]][0] - tol) return false;
    }
    return true;
  };
}

DeviationFn ArgmaxDeviation(std::vector<Index> play, std::size_t states,
                            std::size_t strategies) {
  return [play = std::move(play), states, strategies](
             Index x, const Continuation& k, Index sigma) {
    const double mine = k[play[sigma * states + x]][0];
    DeviationProbe probe;
    probe.gain = -std::numeric_limits<double>::infinity();
    for (Index other = 0; other < strategies; ++other) {
      if (other == sigma) continue;
      const double gain = k[play[other * states + x]][0] - mine;
      if (!probe.deviation || gain > probe.gain) {
        probe.gain = gain;
        probe.deviation = other;
      }
    }
    return probe;
  };
}

CoutilityFreeGame ArgmaxDecision(const FinSet& moves) {
  if (moves.empty()) Fail(ErrorKind::kEmptyMoveSet, "argmax over no moves");
  const std::size_t n = moves.size();
  std::vector<Index> play(n);
  for (Index y = 0; y < n; ++y) play[y] = y;
  const ValueSet reals = ValueSet::Real(1);
  GameTraits traits{.passthrough_coutility = true,
                    .affine_invariant = true,
                    .builtin = "argmax"};
  return CoutilityFreeGame(OpenGame(
      Boundary{FinSet::Unit(), reals}, Boundary{moves, reals}, moves, play,
      PassthroughCoutility(), ArgmaxEquilibrium(play, 1, n), std::move(traits),
      ArgmaxDeviation(play, 1, n)));
}

Bimatrix PrisonersDilemma(double temptation, double reward, double punishment,
                          double sucker) {
  FinSet moves({"C", "D"});
  return Bimatrix{moves,
                  moves,
                  {{reward, reward},
                   {sucker, temptation},
                   {temptation, sucker},
                   {punishment, punishment}}};
}

Bimatrix MatchingPennies() {
  FinSet moves({"H", "T"});
  return Bimatrix{moves, moves, {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}}};
}

namespace {

void CheckBimatrix(const Bimatrix& m) {
  if (m.moves1.empty() || m.moves2.empty()) {
    Fail(ErrorKind::kEmptyMoveSet, "bimatrix players need moves");
  }
  if (m.payoff.size() != m.moves1.size() * m.moves2.size()) {
    Fail(ErrorKind::kSchemaError, "bimatrix payoff must cover every profile");
  }
  for (const auto& p : m.payoff) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1])) {
      Fail(ErrorKind::kInvalidArgument, "bimatrix payoffs must be finite");
    }
  }
}

}  // namespace

CoutilityFreeGame BimatrixGame(const Bimatrix& m) {
  CheckBimatrix(m);
  return CoutilityFreeGame(
      Tensor(ArgmaxDecision(m.moves1).game(), ArgmaxDecision(m.moves2).game()));
}

std::vector<Value> BimatrixPayoffs(const Bimatrix& m) {
  CheckBimatrix(m);
  std::vector<Value> out;
  for (const auto& p : m.payoff) out.push_back({p[0], p[1]});
  return out;
}

Continuation BimatrixContinuation(const Bimatrix& m) {
  return Continuation::FromRows(BimatrixPayoffs(m), 2);
}

CoutilityFreeGame TrivialGame(const FinSet& moves, const ValueSet& utilities,
                              bool all) {
  if (moves.empty()) Fail(ErrorKind::kEmptyMoveSet, "trivial game over no moves");
  std::vector<Index> play(moves.size());
  for (Index y = 0; y < moves.size(); ++y) play[y] = y;
  GameTraits traits{.passthrough_coutility = true,
                    .affine_invariant = true,
                    .builtin = all ? "all" : "none"};
  return CoutilityFreeGame(OpenGame(
      Boundary{FinSet::Unit(), utilities}, Boundary{moves, utilities}, moves,
      std::move(play), PassthroughCoutility(),
      [all](Index, const Continuation&, Index, double) { return all; },
      std::move(traits)));
}

namespace {

void CheckStage(Index s, std::size_t strategies) {
  if (s >= strategies) {
    Fail(ErrorKind::kUnknownMove, "stage strategy out of range");
  }
}

}  // namespace

StrategyTransducer AllConstant(const FinSet& moves, std::size_t strategies,
                               Index stage) {
  CheckStage(stage, strategies);
  return StrategyTransducer(FinSet({"constant"}), 0, {stage},
                            std::vector<Index>(moves.size(), 0), moves.size());
}

StrategyTransducer GrimTrigger(const FinSet& moves, std::size_t strategies,
                               Index cooperate, Index punish,
                               const std::vector<Index>& triggers) {
  CheckStage(cooperate, strategies);
  CheckStage(punish, strategies);
  const std::size_t m = moves.size();
  std::vector<Index> step(2 * m, 0);
  for (Index y : triggers) {
    if (y >= m) Fail(ErrorKind::kUnknownMove, "trigger move out of range");
    step[y] = 1;
  }
  for (Index y = 0; y < m; ++y) step[m + y] = 1;
  return StrategyTransducer(FinSet({"cooperate", "punish"}), 0,
                            {cooperate, punish}, std::move(step), m);
}

StrategyTransducer TitForTat(const FinSet& moves, std::size_t strategies,
                             Index start, const std::vector<Index>& echo) {
  CheckStage(start, strategies);
  const std::size_t m = moves.size();
  if (echo.size() != m) {
    Fail(ErrorKind::kSchemaError, "echo must name a response to every move");
  }
  std::vector<std::string> labels{"start"};
  std::vector<Index> stage{start};
  for (Index y = 0; y < m; ++y) {
    CheckStage(echo[y], strategies);
    labels.push_back("after " + moves.label(y));
    stage.push_back(echo[y]);
  }
  std::vector<Index> step;
  for (Index q = 0; q <= m; ++q) {
    for (Index y = 0; y < m; ++y) step.push_back(1 + y);
  }
  return StrategyTransducer(FinSet(std::move(labels)), 0, std::move(stage),
                            std::move(step), m)
      .Minimized();
}

std::vector<Index> SwappedProfileEcho(const Bimatrix& m) {
  if (m.moves1 != m.moves2) {
    Fail(ErrorKind::kInvalidArgument,
         "profile swapping needs both players to share their moves");
  }
  const std::size_t n = m.moves1.size();
  std::vector<Index> echo(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) echo[a * n + b] = b * n + a;
  }
  return echo;
}

StrategyTransducer DepthTableStrategy(const DepthTable& table,
                                      const FinSet& moves) {
  return table.ToTransducer(moves);
}

}  // namespace opengames
