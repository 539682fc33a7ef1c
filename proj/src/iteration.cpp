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

#include "opengames/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>

#include "opengames/error.hpp"
#include "opengames/parallel.hpp"
#include "opengames/reference.hpp"

namespace opengames {

std::string_view VerdictStatusName(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kHolds: return "Holds";
    case VerdictStatus::kFails: return "Fails";
    case VerdictStatus::kUnknown: return "Unknown";
  }
  return "Unknown";
}

IteratedGame::IteratedGame(CoutilityFreeGame stage) : stage_(std::move(stage)) {
  if (stage_.moves().empty()) {
    Fail(ErrorKind::kEmptyMoveSet, "stage game has no moves");
  }
  if (stage_.strategies().empty()) {
    Fail(ErrorKind::kEmptyMoveSet, "stage game has no strategies");
  }
}

IteratedGame IterateGame(const CoutilityFreeGame& stage) {
  return IteratedGame(stage);
}

void IteratedGame::Validate(const StrategyTransducer& t) const {
  if (t.num_moves() != moves().size()) {
    Fail(ErrorKind::kSchemaError, "transducer reads a different move set");
  }
  for (Index s : t.stage_table()) {
    if (s >= stage_.strategies().size()) {
      Fail(ErrorKind::kSchemaError, "transducer emits an unknown strategy");
    }
  }
}

void IteratedGame::Validate(const DepthTable& t) const {
  if (t.num_moves() != moves().size()) {
    Fail(ErrorKind::kSchemaError, "depth table reads a different move set");
  }
  const std::size_t n = stage_.strategies().size();
  if (t.fallback() >= n ||
      std::ranges::any_of(t.table(), [n](Index s) { return s >= n; })) {
    Fail(ErrorKind::kSchemaError, "depth table names an unknown strategy");
  }
}

StreamPrefix IteratedGame::PlayStream(const StrategyTransducer& t,
                                      std::size_t d) const {
  Validate(t);
  StreamPrefix out;
  out.reserve(d);
  Index q = t.initial();
  for (std::size_t i = 0; i < d; ++i) {
    const Index y = stage_.Play(t.stage(q));
    out.push_back(y);
    q = t.step(q, y);
  }
  return out;
}

StreamPrefix IteratedGame::PlayStream(const DepthTable& t,
                                      std::size_t d) const {
  Validate(t);
  StreamPrefix out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(stage_.Play(t.At(out)));
  return out;
}

Lasso IteratedGame::PlayLasso(const StrategyTransducer& t, Index from) const {
  Validate(t);
  if (from >= t.num_states()) Fail(ErrorKind::kInvalidArgument, "no such state");
  auto next = [&](Index q) { return t.step(q, stage_.Play(t.stage(q))); };
  // Brent: cycle length first, then the first state on the cycle.
  std::size_t power = 1;
  std::size_t length = 1;
  Index tortoise = from;
  Index hare = next(from);
  while (tortoise != hare) {
    if (power == length) {
      tortoise = hare;
      power *= 2;
      length = 0;
    }
    hare = next(hare);
    ++length;
  }
  tortoise = from;
  hare = from;
  for (std::size_t i = 0; i < length; ++i) hare = next(hare);
  std::size_t mu = 0;
  while (tortoise != hare) {
    tortoise = next(tortoise);
    hare = next(hare);
    ++mu;
  }
  Lasso out;
  Index q = from;
  for (std::size_t i = 0; i < mu; ++i) {
    out.prefix.push_back(stage_.Play(t.stage(q)));
    q = next(q);
  }
  for (std::size_t i = 0; i < length; ++i) {
    out.cycle.push_back(stage_.Play(t.stage(q)));
    q = next(q);
  }
  return out;
}

Index IteratedGame::Now(const StrategyTransducer& t) const {
  Validate(t);
  return t.stage(t.initial());
}

StrategyTransducer IteratedGame::Ltr(const StrategyTransducer& t,
                                     Index y) const {
  Validate(t);
  if (y >= moves().size()) Fail(ErrorKind::kUnknownMove, "move out of range");
  return t.Rerooted(t.step(t.initial(), y));
}

namespace {

struct Node {
  StreamPrefix history;
  Index state;
  UtilityFunctional k;
};

struct NodeResult {
  bool member = true;
  bool marginal = false;
  std::optional<Index> deviation;
};

// Per-request data shared by the bounded and exact procedures.
class StageChecker {
 public:
  StageChecker(const IteratedGame& g, const StrategyTransducer& t,
               double tolerance, bool parallel)
      : g_(g), t_(t), tolerance_(tolerance), lassos_(t.num_states()) {
    std::exception_ptr failure;
    const auto n = static_cast<std::int64_t>(t.num_states());
#pragma omp parallel for num_threads(parallel ? NumThreads() : 1)
    for (std::int64_t q = 0; q < n; ++q) {
      try {
        lassos_[q] = g.PlayLasso(t, static_cast<Index>(q));
      } catch (...) {
#pragma omp critical(opengames_stage_checker)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // y -> k(y :: self-play of the machine from step(q, y)), exactly.
  Continuation StageContinuation(const UtilityFunctional& k, Index q) const {
    const std::size_t ny = g_.moves().size();
    Continuation c(ny, k.dim());
    StreamPrefix head;
    for (Index y = 0; y < ny; ++y) {
      const Lasso& rest = lassos_[t_.step(q, y)];
      head.assign(1, y);
      head.insert(head.end(), rest.prefix.begin(), rest.prefix.end());
      c.Set(y, EvaluateLasso(k, head, rest.cycle));
    }
    return c;
  }

  NodeResult Check(const Continuation& c, Index q) const {
    const CoutilityFreeGame& stage = g_.stage();
    const Index sigma = t_.stage(q);
    NodeResult out;
    out.member = stage.Equilibrium(c, sigma, tolerance_);
    std::optional<DeviationProbe> probe = stage.game().Deviation(0, c, sigma);
    if (probe) {
      out.marginal = std::abs(probe->gain) <= tolerance_;
      if (!out.member) out.deviation = probe->deviation;
    } else {
      out.marginal = out.member != stage.Equilibrium(c, sigma, -tolerance_);
      if (!out.member) {
        for (Index s = 0; s < stage.strategies().size(); ++s) {
          if (stage.Equilibrium(c, s, tolerance_)) {
            out.deviation = s;
            break;
          }
        }
      }
    }
    return out;
  }

  const Lasso& lasso(Index q) const { return lassos_[q]; }

 private:
  const IteratedGame& g_;
  const StrategyTransducer& t_;
  double tolerance_;
  std::vector<Lasso> lassos_;
};

// Child utility along y; a spent finite horizon is constant and stays put.
UtilityFunctional ChildUtility(const UtilityFunctional& k, Index y) {
  if (k.kind() != UtilityKind::kDiscounted && k.horizon() == 0) return k;
  return Shift(k, y);
}

void CheckCompatible(const IteratedGame& g, const UtilityFunctional& k) {
  if (k.moves() != g.moves()) {
    Fail(ErrorKind::kBoundaryMismatch, "utility is over a different move set");
  }
  if (k.dim() != g.stage().utilities().dim()) {
    Fail(ErrorKind::kBoundaryMismatch,
         "utility dimension differs from the stage game's R");
  }
}

std::vector<NodeResult> CheckAll(const StageChecker& checker,
                                 const std::vector<Node>& nodes,
                                 bool parallel) {
  std::vector<NodeResult> results(nodes.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(nodes.size());
#pragma omp parallel for num_threads(parallel ? NumThreads() : 1) \
    schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const Node& node = nodes[i];
      results[i] = checker.Check(
          checker.StageContinuation(node.k, node.state), node.state);
    } catch (...) {
#pragma omp critical(opengames_check_all)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void MarkApproximate(const UtilityFunctional& k, Verdict& v) {
  if (k.approximate()) {
    v.approximate = true;
    v.warnings.push_back(
        "ApproximateUtility: window mean stands in for the limit average");
  }
}

Verdict RunPhiCheck(const IteratedGame& g, const StrategyTransducer& t,
                    const UtilityFunctional& k, std::size_t depth,
                    const PhiOptions& options, bool parallel) {
  g.Validate(t);
  CheckCompatible(g, k);
  if (!(options.tolerance >= 0.0)) {
    Fail(ErrorKind::kInvalidArgument, "tolerance must be non-negative");
  }
  // Histories reaching the same machine state at the same length see
  // continuations that differ by a translation; an affine-invariant stage
  // equilibrium cannot tell them apart.
  const bool merge = g.stage().game().traits().affine_invariant;
  const StageChecker checker(g, t, options.tolerance, parallel);

  Verdict verdict;
  verdict.tolerance = options.tolerance;
  MarkApproximate(k, verdict);
  // The zeroth approximant is the full predicate.
  verdict.depth_checked = 0;
  if (depth == 0) return verdict;

  std::vector<Node> level{Node{{}, t.initial(), k}};
  for (std::size_t length = 0; length < depth; ++length) {
    std::vector<NodeResult> results = CheckAll(checker, level, parallel);
    verdict.nodes_checked += level.size();
    for (const NodeResult& r : results) verdict.marginal |= r.marginal;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!results[i].member) {
        verdict.status = VerdictStatus::kFails;
        verdict.witness = Witness{level[i].history, results[i].deviation};
        verdict.depth_checked = length + 1;
        return verdict;
      }
    }
    if (length + 1 == depth) break;

    // Parents are in (length, lexicographic) order of their histories and
    // children are generated in move order, so the first history to reach a
    // state is the least one.
    std::vector<Node> next;
    std::vector<char> seen(merge ? t.num_states() : 0, 0);
    for (const Node& parent : level) {
      for (Index y = 0; y < g.moves().size(); ++y) {
        const Index q = t.step(parent.state, y);
        if (merge) {
          if (seen[q]) continue;
          seen[q] = 1;
        }
        if (verdict.nodes_checked + next.size() >= options.node_budget) {
          verdict.status = VerdictStatus::kUnknown;
          verdict.depth_checked = length + 1;
          verdict.warnings.push_back(
              "node budget exhausted before reaching the requested depth");
          return verdict;
        }
        StreamPrefix history = parent.history;
        history.push_back(y);
        next.push_back(Node{std::move(history), q, ChildUtility(parent.k, y)});
      }
    }
    level = std::move(next);
  }
  verdict.status = VerdictStatus::kHolds;
  verdict.depth_checked = depth;
  return verdict;
}

Verdict RunGfpExact(const IteratedGame& g, const StrategyTransducer& t,
                    const UtilityFunctional& k, double tolerance,
                    bool parallel) {
  g.Validate(t);
  CheckCompatible(g, k);
  if (!g.stage().game().traits().affine_invariant) {
    Fail(ErrorKind::kNotAffineInvariant,
         "stage equilibrium is not declared affine-invariant; use the "
         "bounded check");
  }
  if (k.kind() != UtilityKind::kDiscounted) {
    Fail(ErrorKind::kUnsupportedUtility,
         "exact membership needs a discounted utility");
  }
  if (!(tolerance >= 0.0)) {
    Fail(ErrorKind::kInvalidArgument, "tolerance must be non-negative");
  }
  const StageChecker checker(g, t, tolerance, parallel);
  const std::size_t nq = t.num_states();
  const std::size_t ny = g.moves().size();

  // Least history of length >= 1 reaching each state, by BFS from the
  // root's successors.
  std::vector<std::optional<StreamPrefix>> reached(nq);
  std::vector<Index> frontier;
  for (Index y = 0; y < ny; ++y) {
    const Index q = t.step(t.initial(), y);
    if (!reached[q]) {
      reached[q] = StreamPrefix{y};
      frontier.push_back(q);
    }
  }
  while (!frontier.empty()) {
    std::vector<Index> next;
    for (Index p : frontier) {
      for (Index y = 0; y < ny; ++y) {
        const Index q = t.step(p, y);
        if (reached[q]) continue;
        StreamPrefix h = *reached[p];
        h.push_back(y);
        reached[q] = std::move(h);
        next.push_back(q);
      }
    }
    frontier = std::move(next);
  }

  // Nodes: the root with the full continuation, then every state reachable
  // after at least one move. With delta > 0 the continuation at a later
  // history is a positive affine image of the state's root-form one; with
  // delta = 0 it is constant.
  struct ExactNode {
    StreamPrefix history;
    Index state;
    bool constant;
  };
  std::vector<ExactNode> nodes{{{}, t.initial(), false}};
  const bool vanishing = k.delta() == 0.0;
  for (Index q = 0; q < nq; ++q) {
    if (!reached[q]) continue;
    if (q == t.initial() && !vanishing) continue;
    nodes.push_back({*reached[q], q, vanishing});
  }

  std::vector<NodeResult> results(nodes.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(nodes.size());
#pragma omp parallel for num_threads(parallel ? NumThreads() : 1) \
    schedule(dynamic, 2)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const ExactNode& node = nodes[i];
      Continuation c = node.constant
                           ? Continuation(ny, k.dim())
                           : checker.StageContinuation(k, node.state);
      results[i] = checker.Check(c, node.state);
    } catch (...) {
#pragma omp critical(opengames_gfp_exact)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  Verdict verdict;
  verdict.tolerance = tolerance;
  verdict.nodes_checked = nodes.size();
  std::optional<std::size_t> worst;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    verdict.marginal |= results[i].marginal;
    if (results[i].member) continue;
    const StreamPrefix& h = nodes[i].history;
    if (!worst || h.size() < nodes[*worst].history.size() ||
        (h.size() == nodes[*worst].history.size() &&
         h < nodes[*worst].history)) {
      worst = i;
    }
  }
  if (worst) {
    verdict.status = VerdictStatus::kFails;
    verdict.witness = Witness{nodes[*worst].history, results[*worst].deviation};
  } else {
    verdict.status = VerdictStatus::kHolds;
  }
  if (verdict.marginal) {
    verdict.warnings.push_back(
        "NumericallyMarginal: a deviation gain lies within the tolerance");
  }
  return verdict;
}

}  // namespace

Verdict IteratedGame::PhiCheck(const StrategyTransducer& t,
                               const UtilityFunctional& k, std::size_t depth,
                               const PhiOptions& options) const {
  Verdict v = RunPhiCheck(*this, t, k, depth, options, true);
  if (v.marginal) {
    v.warnings.push_back(
        "NumericallyMarginal: a deviation gain lies within the tolerance");
  }
  return v;
}

Verdict IteratedGame::PhiCheck(const DepthTable& t, const UtilityFunctional& k,
                               std::size_t depth,
                               const PhiOptions& options) const {
  Validate(t);
  return PhiCheck(t.ToTransducer(moves()), k, depth, options);
}

Verdict IteratedGame::GfpMembershipExact(const StrategyTransducer& t,
                                         const UtilityFunctional& k,
                                         double tolerance) const {
  return RunGfpExact(*this, t, k, tolerance, true);
}

namespace reference {

Verdict PhiCheck(const IteratedGame& g, const StrategyTransducer& t,
                 const UtilityFunctional& k, std::size_t depth,
                 const PhiOptions& options) {
  Verdict v = RunPhiCheck(g, t, k, depth, options, false);
  if (v.marginal) {
    v.warnings.push_back(
        "NumericallyMarginal: a deviation gain lies within the tolerance");
  }
  return v;
}

Verdict GfpMembershipExact(const IteratedGame& g, const StrategyTransducer& t,
                           const UtilityFunctional& k, double tolerance) {
  return RunGfpExact(g, t, k, tolerance, false);
}

}  // namespace reference

Index Hd(const StreamPrefix& w) {
  if (w.empty()) Fail(ErrorKind::kInvalidArgument, "head of an empty prefix");
  return w.front();
}

StreamPrefix Tl(const StreamPrefix& w) {
  if (w.empty()) Fail(ErrorKind::kInvalidArgument, "tail of an empty prefix");
  return StreamPrefix(w.begin() + 1, w.end());
}

StreamGenerator PrefixGenerator(StreamPrefix w) {
  return [w = std::move(w), i = std::size_t{0}]() mutable {
    if (i >= w.size()) Fail(ErrorKind::kInvalidArgument, "prefix exhausted");
    return w[i++];
  };
}

StreamGenerator LassoGenerator(Lasso lasso) {
  if (lasso.cycle.empty()) {
    Fail(ErrorKind::kInvalidArgument, "a lasso needs a nonempty cycle");
  }
  return [l = std::move(lasso), i = std::size_t{0}]() mutable {
    const std::size_t at = i++;
    if (at < l.prefix.size()) return l.prefix[at];
    return l.cycle[(at - l.prefix.size()) % l.cycle.size()];
  };
}

StreamGenerator PlayGenerator(const IteratedGame& g,
                              const StrategyTransducer& t) {
  g.Validate(t);
  return [stage = g.stage(), t, q = t.initial()]() mutable {
    const Index y = stage.Play(t.stage(q));
    q = t.step(q, y);
    return y;
  };
}

std::optional<std::size_t> BisimCheck(StreamGenerator a, StreamGenerator b,
                                      std::size_t depth) {
  for (std::size_t i = 0; i < depth; ++i) {
    if (a() != b()) return i;
  }
  return std::nullopt;
}

}  // namespace opengames
