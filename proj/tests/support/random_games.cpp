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

#include "support/random_games.hpp"

#include <memory>
#include <string>

#include "opengames/game_library.hpp"

namespace opengames::testing {

std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double UniformReal(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Boundary RandomBoundary(Rng& rng, std::string_view prefix, std::size_t max) {
  const std::string p(prefix);
  return Boundary{FinSet::Range(p, Uniform(rng, 1, max)),
                  ValueSet::Indexed(FinSet::Range(p + "r", Uniform(rng, 1, max)))};
}

TableGame RandomTableGame(Rng& rng, const Boundary& dom, const Boundary& cod,
                          std::size_t strategies, double density) {
  const std::size_t nx = dom.points.size();
  const std::size_t ny = cod.points.size();
  const std::size_t nr = cod.values.size();
  const std::size_t ns = dom.values.size();
  const std::size_t kc = *ContinuationCount(cod.values, ny, kDefaultEnumerationGuard);
  std::bernoulli_distribution coin(density);
  GameTables t;
  for (Index i = 0; i < strategies * nx; ++i) t.play.push_back(Uniform(rng, 0, ny - 1));
  for (Index i = 0; i < strategies * nx * nr; ++i) {
    t.coutility.push_back(Uniform(rng, 0, ns - 1));
  }
  for (Index i = 0; i < nx * kc * strategies; ++i) t.equilibrium.push_back(coin(rng));
  GameTables copy = t;
  return TableGame{TabulatedGame(dom, cod, FinSet::Range("s", strategies), std::move(copy)),
                   std::move(t)};
}

CoutilityFreeGame RandomCoutilityFreeGame(Rng& rng, const FinSet& moves,
                                          const ValueSet& utilities,
                                          std::size_t strategies,
                                          double density) {
  const std::size_t nr = utilities.size();
  const std::size_t kc =
      *ContinuationCount(utilities, moves.size(), kDefaultEnumerationGuard);
  std::bernoulli_distribution coin(density);
  GameTables t;
  for (Index s = 0; s < strategies; ++s) t.play.push_back(Uniform(rng, 0, moves.size() - 1));
  for (Index s = 0; s < strategies; ++s) {
    for (Index r = 0; r < nr; ++r) t.coutility.push_back(r);
  }
  for (Index i = 0; i < kc * strategies; ++i) t.equilibrium.push_back(coin(rng));
  return CoutilityFreeGame(TabulatedGame(Boundary{FinSet::Unit(), utilities},
                                         Boundary{moves, utilities},
                                         FinSet::Range("s", strategies),
                                         std::move(t)));
}

CoutilityFreeGame FiniteArgmaxGame(const FinSet& moves, const ValueSet& r) {
  std::vector<Index> play(moves.size());
  for (Index y = 0; y < moves.size(); ++y) play[y] = y;
  return CoutilityFreeGame(OpenGame(
      Boundary{FinSet::Unit(), r}, Boundary{moves, r}, moves, play,
      PassthroughCoutility(), ArgmaxEquilibrium(play, 1, moves.size()),
      GameTraits{.passthrough_coutility = true, .affine_invariant = true,
                 .builtin = "argmax"},
      ArgmaxDeviation(play, 1, moves.size())));
}

CoutilityFreeGame UnflaggedArgmax(const FinSet& moves) {
  std::vector<Index> play(moves.size());
  for (Index y = 0; y < moves.size(); ++y) play[y] = y;
  const ValueSet reals = ValueSet::Real(1);
  return CoutilityFreeGame(OpenGame(
      Boundary{FinSet::Unit(), reals}, Boundary{moves, reals}, moves, play,
      PassthroughCoutility(), ArgmaxEquilibrium(play, 1, moves.size()),
      GameTraits{.passthrough_coutility = true}));
}

StrategyTransducer RandomTransducer(Rng& rng, std::size_t states,
                                    std::size_t moves, std::size_t strategies) {
  std::vector<Index> stage(states);
  std::vector<Index> step(states * moves);
  for (Index& s : stage) s = Uniform(rng, 0, strategies - 1);
  for (Index& q : step) q = Uniform(rng, 0, states - 1);
  return StrategyTransducer(FinSet::Range("q", states), Uniform(rng, 0, states - 1),
                            std::move(stage), std::move(step), moves);
}

UtilityFunctional RandomUtility(Rng& rng, const FinSet& moves, std::size_t dim,
                                UtilityKind kind, double delta_lo,
                                double delta_hi) {
  std::vector<Value> payoff(moves.size(), Value(dim));
  for (auto& row : payoff) {
    for (double& v : row) v = UniformReal(rng, -5.0, 5.0);
  }
  Value offset(dim);
  for (double& v : offset) v = UniformReal(rng, -3.0, 3.0);
  const double scale = UniformReal(rng, 0.5, 2.0);
  switch (kind) {
    case UtilityKind::kDiscounted:
      return UtilityFunctional::Discounted(moves, std::move(payoff),
                                           UniformReal(rng, delta_lo, delta_hi),
                                           std::move(offset), scale);
    case UtilityKind::kFiniteHorizon:
      return UtilityFunctional::FiniteHorizon(moves, std::move(payoff),
                                              Uniform(rng, 1, 12),
                                              std::move(offset), scale);
    case UtilityKind::kMeanPayoffApprox:
      break;
  }
  return UtilityFunctional::MeanPayoffApprox(moves, std::move(payoff),
                                             Uniform(rng, 1, 12));
}

namespace {

struct CoalgebraShape {
  CoutilityFreeGame stage;
  std::vector<Index> now;
  std::vector<Index> ltr;
  std::size_t moves;
};

bool OneDeviation(const CoalgebraShape& c, const Continuation& k, Index sigma,
                  double tol) {
  const std::size_t n = c.now.size();
  const std::size_t ny = c.moves;
  std::vector<char> seen(n, 0);
  std::vector<Index> frontier{sigma};
  seen[sigma] = 1;
  while (!frontier.empty()) {
    const Index s = frontier.back();
    frontier.pop_back();
    Continuation stage_k(ny, k.dim());
    for (Index y = 0; y < ny; ++y) {
      const Index target = c.ltr[s * ny + y];
      std::optional<Index> point;
      for (Index t = 0; t < n && !point; ++t) {
        if (c.stage.Play(c.now[t]) == y && c.ltr[t * ny + y] == target) point = t;
      }
      if (!point) return false;
      stage_k.Set(y, k[*point]);
    }
    if (!c.stage.Equilibrium(stage_k, c.now[s], tol)) return false;
    for (Index y = 0; y < ny; ++y) {
      const Index next = c.ltr[s * ny + y];
      if (!seen[next]) {
        seen[next] = 1;
        frontier.push_back(next);
      }
    }
  }
  return true;
}

}  // namespace

FiniteCoalgebra CanonicalCoalgebra(const IteratedGame& g,
                                   std::vector<Index> now,
                                   std::vector<Index> ltr) {
  const std::size_t n = now.size();
  const std::size_t ny = g.moves().size();
  const ValueSet& r = g.stage().utilities();
  auto shape = std::make_shared<const CoalgebraShape>(
      CoalgebraShape{g.stage(), now, ltr, ny});
  std::vector<Index> play(n);
  for (Index s = 0; s < n; ++s) play[s] = s;
  FinSet states = FinSet::Range("h", n);
  CoutilityFreeGame h(OpenGame(
      Boundary{g.stage().game().dom().points, r}, Boundary{states, r}, states, play,
      PassthroughCoutility(),
      [shape](Index, const Continuation& k, Index sigma, double tol) {
        return OneDeviation(*shape, k, sigma, tol);
      },
      GameTraits{.passthrough_coutility = true}));
  std::vector<Index> hd(n);
  std::vector<Index> tl(n);
  for (Index s = 0; s < n; ++s) {
    hd[s] = g.stage().Play(now[s]);
    tl[s] = ltr[s * ny + hd[s]];
  }
  return FiniteCoalgebra{std::move(h), std::move(now), std::move(ltr),
                         std::move(hd), std::move(tl)};
}

FiniteCoalgebra RandomCoalgebra(Rng& rng, const IteratedGame& g,
                                std::size_t max_states, bool factored) {
  const std::size_t ng = g.stage().strategies().size();
  const std::size_t ny = g.moves().size();
  std::vector<Index> now;
  std::vector<Index> ltr;
  if (factored && ng <= max_states) {
    const std::size_t nm = Uniform(rng, 1, max_states / ng);
    std::vector<Index> f(nm * ny);
    std::vector<Index> step(nm * ny);
    for (Index& v : f) v = Uniform(rng, 0, ng - 1);
    for (Index& v : step) v = Uniform(rng, 0, nm - 1);
    for (Index a = 0; a < ng; ++a) {
      for (Index m = 0; m < nm; ++m) {
        now.push_back(a);
        for (Index y = 0; y < ny; ++y) {
          ltr.push_back(f[m * ny + y] * nm + step[m * ny + y]);
        }
      }
    }
  } else {
    const std::size_t n = Uniform(rng, 1, max_states);
    for (Index s = 0; s < n; ++s) now.push_back(Uniform(rng, 0, ng - 1));
    for (Index i = 0; i < n * ny; ++i) ltr.push_back(Uniform(rng, 0, n - 1));
  }
  return CanonicalCoalgebra(g, std::move(now), std::move(ltr));
}

std::vector<Continuation> TransportedSample(Rng& rng, const IteratedGame& g,
                                            const FiniteCoalgebra& c,
                                            std::size_t count) {
  std::vector<Continuation> out;
  for (std::size_t i = 0; i < count; ++i) {
    const UtilityFunctional k =
        RandomUtility(rng, g.moves(), g.stage().utilities().dim(),
                      UtilityKind::kDiscounted, 0.2, 0.95);
    out.push_back(TransportedContinuation(g, c, k));
  }
  return out;
}

}  // namespace opengames::testing
