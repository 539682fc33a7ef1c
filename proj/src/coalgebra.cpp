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

#include "opengames/coalgebra.hpp"

#include <functional>

#include "opengames/error.hpp"

namespace opengames {

void ValidateShape(const IteratedGame& g, const FiniteCoalgebra& c) {
  const std::size_t ns = c.h.strategies().size();
  const std::size_t nz = c.h.moves().size();
  const std::size_t ny = g.moves().size();
  const std::size_t ng = g.stage().strategies().size();
  if (c.h.utilities() != g.stage().utilities()) {
    Fail(ErrorKind::kBoundaryMismatch,
         "coalgebra game and stage game have different utilities");
  }
  auto check = [](bool ok, const char* what) {
    if (!ok) Fail(ErrorKind::kSchemaError, what);
  };
  check(c.now.size() == ns, "now must have one entry per strategy of H");
  check(c.ltr.size() == ns * ny, "ltr must cover strategies of H x Y");
  check(c.hd.size() == nz, "hd must have one entry per move of H");
  check(c.tl.size() == nz, "tl must have one entry per move of H");
  for (Index s : c.now) check(s < ng, "now names an unknown stage strategy");
  for (Index s : c.ltr) check(s < ns, "ltr names an unknown strategy of H");
  for (Index y : c.hd) check(y < ny, "hd names an unknown stage move");
  for (Index z : c.tl) check(z < nz, "tl names an unknown move of H");
}

GameMorphism StructureMap(const IteratedGame& g, const FiniteCoalgebra& c) {
  ValidateShape(g, c);
  const std::size_t ns = c.h.strategies().size();
  const std::size_t nz = c.h.moves().size();
  const std::size_t ny = g.moves().size();
  GameMorphism alpha;
  alpha.alpha_y.resize(nz);
  for (Index z = 0; z < nz; ++z) alpha.alpha_y[z] = c.hd[z] * nz + c.tl[z];
  alpha.alpha_sigma.resize(ns);
  for (Index s = 0; s < ns; ++s) {
    std::vector<Index> f(c.ltr.begin() + s * ny, c.ltr.begin() + (s + 1) * ny);
    alpha.alpha_sigma[s] = EncodeFgStrategy(c.now[s], f, ns);
  }
  return alpha;
}

MorphismCheck CheckCoalgebra(const IteratedGame& g, const FiniteCoalgebra& c,
                             const MorphismCheckOptions& options) {
  const GameMorphism alpha = StructureMap(g, c);
  const CoutilityFreeGame fg = FgObject(g.stage(), c.h, options.guard);
  return CheckMorphism(alpha, c.h, fg, options);
}

Lasso UnfoldedStream(const FiniteCoalgebra& c, Index z) {
  if (z >= c.tl.size()) Fail(ErrorKind::kInvalidArgument, "no such move of H");
  auto next = [&](Index v) { return c.tl[v]; };
  std::size_t power = 1;
  std::size_t length = 1;
  Index tortoise = z;
  Index hare = next(z);
  while (tortoise != hare) {
    if (power == length) {
      tortoise = hare;
      power *= 2;
      length = 0;
    }
    hare = next(hare);
    ++length;
  }
  tortoise = z;
  hare = z;
  for (std::size_t i = 0; i < length; ++i) hare = next(hare);
  std::size_t mu = 0;
  while (tortoise != hare) {
    tortoise = next(tortoise);
    hare = next(hare);
    ++mu;
  }
  Lasso out;
  Index v = z;
  for (std::size_t i = 0; i < mu; ++i, v = next(v)) out.prefix.push_back(c.hd[v]);
  for (std::size_t i = 0; i < length; ++i, v = next(v)) {
    out.cycle.push_back(c.hd[v]);
  }
  return out;
}

StrategyTransducer UnfoldedStrategy(const IteratedGame& g,
                                    const FiniteCoalgebra& c, Index s) {
  ValidateShape(g, c);
  if (s >= c.now.size()) {
    Fail(ErrorKind::kInvalidArgument, "no such strategy of H");
  }
  return StrategyTransducer(c.h.strategies(), s, c.now, c.ltr,
                            g.moves().size());
}

Continuation UnfoldedContinuation(const FiniteCoalgebra& c,
                                  const UtilityFunctional& k) {
  const std::size_t nz = c.h.moves().size();
  Continuation out(nz, k.dim());
  for (Index z = 0; z < nz; ++z) {
    const Lasso stream = UnfoldedStream(c, z);
    out.Set(z, EvaluateLasso(k, stream.prefix, stream.cycle));
  }
  return out;
}

Continuation TransportedContinuation(const IteratedGame& g,
                                     const FiniteCoalgebra& c,
                                     const UtilityFunctional& k) {
  const std::size_t nz = c.h.moves().size();
  const std::size_t ny = g.moves().size();
  Continuation out(ny * nz, k.dim());
  for (Index z = 0; z < nz; ++z) {
    const Lasso stream = UnfoldedStream(c, z);
    StreamPrefix head;
    for (Index y = 0; y < ny; ++y) {
      head.assign(1, y);
      head.insert(head.end(), stream.prefix.begin(), stream.prefix.end());
      out.Set(y * nz + z, EvaluateLasso(k, head, stream.cycle));
    }
  }
  return out;
}

namespace {

Unfolding BreadthFirst(const IteratedGame& g, const FiniteCoalgebra& c,
                       std::size_t depth, std::size_t guard) {
  Unfolding out;
  for (Index s = 0; s < c.now.size(); ++s) {
    out.sigma.push_back(
        DepthTable::FromTransducer(UnfoldedStrategy(g, c, s), depth, guard));
  }
  for (Index z = 0; z < c.hd.size(); ++z) {
    StreamPrefix w;
    Index v = z;
    for (std::size_t i = 0; i < depth; ++i) {
      w.push_back(c.hd[v]);
      v = c.tl[v];
    }
    out.y.push_back(std::move(w));
  }
  return out;
}

Unfolding DepthFirst(const IteratedGame& g, const FiniteCoalgebra& c,
                     std::size_t depth, std::size_t guard) {
  const std::size_t ny = g.moves().size();
  const std::size_t entries = HistoryCount(ny, depth, guard).value();
  std::vector<std::size_t> level_start;
  for (std::size_t length = 0, start = 0, width = 1; length < depth;
       ++length, start += width, width *= ny) {
    level_start.push_back(start);
  }
  Unfolding out;
  for (Index s = 0; s < c.now.size(); ++s) {
    std::vector<Index> table(entries);
    std::function<void(Index, std::size_t, std::size_t)> visit =
        [&](Index state, std::size_t length, std::size_t code) {
          table[level_start[length] + code] = c.now[state];
          if (length + 1 == depth) return;
          for (Index y = 0; y < ny; ++y) {
            visit(c.ltr[state * ny + y], length + 1, code * ny + y);
          }
        };
    if (depth > 0) visit(s, 0, 0);
    out.sigma.emplace_back(ny, depth, std::move(table), c.now[s]);
  }
  for (Index z = 0; z < c.hd.size(); ++z) {
    const Lasso stream = UnfoldedStream(c, z);
    StreamPrefix w;
    for (std::size_t i = 0; i < depth; ++i) {
      w.push_back(i < stream.prefix.size()
                      ? stream.prefix[i]
                      : stream.cycle[(i - stream.prefix.size()) %
                                     stream.cycle.size()]);
    }
    out.y.push_back(std::move(w));
  }
  return out;
}

}  // namespace

Unfolding UnfoldCoalgebra(const IteratedGame& g, const FiniteCoalgebra& c,
                          std::size_t depth, UnfoldOrder order,
                          std::size_t guard) {
  ValidateShape(g, c);
  if (!HistoryCount(g.moves().size(), depth, guard)) {
    Fail(ErrorKind::kEnumerationTooLarge,
         "unfolded strategy tables exceed the enumeration guard");
  }
  return order == UnfoldOrder::kBreadthFirst ? BreadthFirst(g, c, depth, guard)
                                             : DepthFirst(g, c, depth, guard);
}

bool EhatMembership(const IteratedGame& g, const FiniteCoalgebra& c,
                    const DepthTable& sigma, const UtilityFunctional& k,
                    std::size_t depth, double tolerance) {
  ValidateShape(g, c);
  if (c.now.empty()) return false;
  const Continuation kz = UnfoldedContinuation(c, k);
  for (Index s = 0; s < c.now.size(); ++s) {
    const DepthTable unfolded =
        DepthTable::FromTransducer(UnfoldedStrategy(g, c, s), depth);
    if (SameToDepth(unfolded, sigma, depth) &&
        c.h.Equilibrium(kz, s, tolerance)) {
      return true;
    }
  }
  return false;
}

bool EhatMembership(const IteratedGame& g, const FiniteCoalgebra& c,
                    const StrategyTransducer& sigma,
                    const UtilityFunctional& k, std::size_t depth,
                    double tolerance) {
  ValidateShape(g, c);
  if (c.now.empty()) return false;
  const Continuation kz = UnfoldedContinuation(c, k);
  for (Index s = 0; s < c.now.size(); ++s) {
    if (SameStrategy(UnfoldedStrategy(g, c, s), sigma, depth) &&
        c.h.Equilibrium(kz, s, tolerance)) {
      return true;
    }
  }
  return false;
}

}  // namespace opengames
