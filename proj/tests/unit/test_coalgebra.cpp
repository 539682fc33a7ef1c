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


#include <vector>

#include "doctest.h"
#include "opengames/coalgebra.hpp"
#include "opengames/game_library.hpp"
#include "support/errors.hpp"
#include "support/random_games.hpp"

namespace og = opengames;
namespace ot = opengames::testing;

namespace {

constexpr og::Index kCC = 0;
constexpr og::Index kDD = 3;

struct PdCoalgebra {
  og::Bimatrix m = og::PrisonersDilemma();
  og::IteratedGame g = og::IterateGame(og::BimatrixGame(m));
  // State a * 2 + m plays stage profile a. Mode 0 cooperates until anything
  // but (C, C) is seen, mode 1 defects; deviations land on (D, D) in mode 1.
  og::FiniteCoalgebra c = ot::CanonicalCoalgebra(
      g, {0, 0, 1, 1, 2, 2, 3, 3},
      {0, 7, 7, 7, 7, 7, 7, 7, 0, 7, 7, 7, 7, 7, 7, 7,
       0, 7, 7, 7, 7, 7, 7, 7, 0, 7, 7, 7, 7, 7, 7, 7});

  og::UtilityFunctional Discounted(double delta) const {
    return og::UtilityFunctional::Discounted(g.moves(), og::BimatrixPayoffs(m), delta);
  }
};

og::IteratedGame RandomStage(ot::Rng& rng) {
  og::Bimatrix m{og::FinSet::Range("a", ot::Uniform(rng, 1, 2)),
                 og::FinSet::Range("b", ot::Uniform(rng, 1, 2)), {}};
  for (std::size_t i = 0; i < m.moves1.size() * m.moves2.size(); ++i) {
    m.payoff.push_back({ot::UniformReal(rng, -5, 5), ot::UniformReal(rng, -5, 5)});
  }
  return og::IterateGame(og::BimatrixGame(m));
}

og::UtilityFunctional StageUtility(ot::Rng& rng, const og::IteratedGame& g) {
  return ot::RandomUtility(rng, g.moves(), 2, og::UtilityKind::kDiscounted, 0.2, 0.95);
}

}  // namespace

TEST_SUITE("coalgebra") {

TEST_CASE("the grim coalgebra unfolds to grim trigger") {
  const PdCoalgebra pd;
  CHECK(og::SameStrategy(og::UnfoldedStrategy(pd.g, pd.c, 0),
                         og::GrimTrigger(pd.g.moves(), 4, kCC, kDD, {1, 2, 3})));
  CHECK(og::SameStrategy(og::UnfoldedStrategy(pd.g, pd.c, 7),
                         og::AllConstant(pd.g.moves(), 4, kDD)));
  CHECK(og::UnfoldedStream(pd.c, 0) == og::Lasso{{}, {kCC}});
  CHECK(og::UnfoldedStream(pd.c, 7) == og::Lasso{{}, {kDD}});
  CHECK(og::UnfoldedStream(pd.c, 2) == og::Lasso{{1}, {kDD}});
  const og::GameMorphism alpha = og::StructureMap(pd.g, pd.c);
  // hd, tl as y * 8 + z: state a * 2 + m plays a and moves on to ltr(s, a).
  CHECK(alpha.alpha_y == std::vector<og::Index>{0, 7, 15, 15, 23, 23, 31, 31});
  // (now, ltr) as (stage strategy, table over the four moves).
  CHECK(alpha.alpha_sigma[0] == og::EncodeFgStrategy(kCC, {0, 7, 7, 7}, 8));
  CHECK(alpha.alpha_sigma[7] == og::EncodeFgStrategy(kDD, {7, 7, 7, 7}, 8));

  ot::Rng rng = ot::MakeRng(701);
  og::MorphismCheckOptions options;
  options.sample = ot::TransportedSample(rng, pd.g, pd.c, 40);
  const og::MorphismCheck check = og::CheckCoalgebra(pd.g, pd.c, options);
  CHECK(check.passed);
  CHECK(check.sampled);

  const og::StrategyTransducer grim = og::UnfoldedStrategy(pd.g, pd.c, 0);
  CHECK(og::EhatMembership(pd.g, pd.c, grim, pd.Discounted(0.9), 16));
  CHECK_FALSE(og::EhatMembership(pd.g, pd.c, grim, pd.Discounted(0.3), 16));
  CHECK(og::EhatMembership(pd.g, pd.c, og::DepthTable::FromTransducer(grim, 4),
                           pd.Discounted(0.9), 4));
  const og::StrategyTransducer tft =
      og::TitForTat(pd.g.moves(), 4, kCC, og::SwappedProfileEcho(pd.m));
  CHECK_FALSE(og::EhatMembership(pd.g, pd.c, tft, pd.Discounted(0.9), 16));
}

TEST_CASE("breadth-first and depth-first unfoldings agree") {
  ot::Rng rng = ot::MakeRng(702);
  for (int trial = 0; trial < 60; ++trial) {
    const og::IteratedGame g = RandomStage(rng);
    const og::FiniteCoalgebra c = ot::RandomCoalgebra(rng, g, 8, trial % 2 == 0);
    for (std::size_t depth = 0; depth <= 4; ++depth) {
      const og::Unfolding bfs = og::UnfoldCoalgebra(g, c, depth, og::UnfoldOrder::kBreadthFirst);
      const og::Unfolding dfs = og::UnfoldCoalgebra(g, c, depth, og::UnfoldOrder::kDepthFirst);
      CHECK(bfs == dfs);
    }
  }
}

TEST_CASE("unfolding commutes with play") {
  ot::Rng rng = ot::MakeRng(703);
  for (int trial = 0; trial < 60; ++trial) {
    const og::IteratedGame g = RandomStage(rng);
    const og::FiniteCoalgebra c = ot::RandomCoalgebra(rng, g, 8, trial % 2 == 0);
    const og::Unfolding u = og::UnfoldCoalgebra(g, c, 6);
    for (og::Index s = 0; s < c.now.size(); ++s) {
      // Canonical coalgebras play their own state: P_H(s) = s.
      const og::StrategyTransducer t = og::UnfoldedStrategy(g, c, s);
      CHECK(u.y[c.h.Play(s)] == g.PlayStream(t, 6));
      CHECK(og::BisimCheck(og::LassoGenerator(og::UnfoldedStream(c, c.h.Play(s))),
                           og::PlayGenerator(g, t), 32) == std::nullopt);
      CHECK(u.sigma[s] == og::DepthTable::FromTransducer(t, 6));
    }
    for (og::Index z = 0; z < c.tl.size(); ++z) {
      const og::Lasso lasso = og::UnfoldedStream(c, z);
      og::Index v = z;
      for (std::size_t i = 0; i < 40; ++i, v = c.tl[v]) {
        const og::Index expected = c.hd[v];
        const og::Index got = i < lasso.prefix.size()
                                  ? lasso.prefix[i]
                                  : lasso.cycle[(i - lasso.prefix.size()) % lasso.cycle.size()];
        CHECK(got == expected);
      }
      CHECK(lasso.prefix.size() + lasso.cycle.size() <= c.tl.size());
    }
  }
}

TEST_CASE("structure maps of canonical coalgebras are morphisms") {
  ot::Rng rng = ot::MakeRng(704);
  for (int trial = 0; trial < 40; ++trial) {
    const og::IteratedGame g = RandomStage(rng);
    const og::FiniteCoalgebra c = ot::RandomCoalgebra(rng, g, 6, true);
    og::MorphismCheckOptions options;
    options.sample = ot::TransportedSample(rng, g, c, 25);
    const og::MorphismCheck check = og::CheckCoalgebra(g, c, options);
    CHECK_MESSAGE(check.passed, "trial " << trial);
  }
  // Without the factored shape the play square still commutes.
  for (int trial = 0; trial < 40; ++trial) {
    const og::IteratedGame g = RandomStage(rng);
    const og::FiniteCoalgebra c = ot::RandomCoalgebra(rng, g, 6, false);
    og::MorphismCheckOptions options;
    options.sample = ot::TransportedSample(rng, g, c, 5);
    const og::MorphismCheck check = og::CheckCoalgebra(g, c, options);
    if (check.counterexample) {
      CHECK(check.counterexample->condition == og::MorphismCondition::kEquilibrium);
    }
  }
}

TEST_CASE("ehat membership agrees with exact membership of the unfolded machine") {
  ot::Rng rng = ot::MakeRng(705);
  int holds = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const og::IteratedGame g = RandomStage(rng);
    const og::FiniteCoalgebra c = ot::RandomCoalgebra(rng, g, 6, true);
    const og::UtilityFunctional k = StageUtility(rng, g);
    const std::size_t depth = 2 * c.now.size() + 2;
    for (og::Index s = 0; s < c.now.size(); ++s) {
      const og::StrategyTransducer t = og::UnfoldedStrategy(g, c, s);
      const og::Verdict exact = g.GfpMembershipExact(t, k);
      if (exact.marginal) continue;
      const bool ehat = og::EhatMembership(g, c, t, k, depth);
      CHECK(ehat == (exact.status == og::VerdictStatus::kHolds));
      if (ehat) {
        ++holds;
        CHECK(g.PhiCheck(t, k, 5).status != og::VerdictStatus::kFails);
      }
    }
  }
  CHECK(holds > 0);
}

TEST_CASE("malformed coalgebras are rejected") {
  const PdCoalgebra pd;
  og::FiniteCoalgebra bad = pd.c;
  bad.now = {0};
  CHECK(ot::KindOf([&] { og::StructureMap(pd.g, bad); }) == og::ErrorKind::kSchemaError);
  bad = pd.c;
  bad.ltr[3] = 8;
  CHECK(ot::KindOf([&] { og::UnfoldCoalgebra(pd.g, bad, 2); }) == og::ErrorKind::kSchemaError);
  bad = pd.c;
  bad.hd[0] = 4;
  CHECK(ot::KindOf([&] { og::StructureMap(pd.g, bad); }) == og::ErrorKind::kSchemaError);
  CHECK(ot::KindOf([&] { og::UnfoldedStream(pd.c, 8); }) == og::ErrorKind::kInvalidArgument);
  CHECK(ot::KindOf([&] { og::UnfoldCoalgebra(pd.g, pd.c, 40); }) ==
        og::ErrorKind::kEnumerationTooLarge);
}

}  // TEST_SUITE
