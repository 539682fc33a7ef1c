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
#include "opengames/game_library.hpp"
#include "opengames/iteration.hpp"
#include "opengames/parallel.hpp"
#include "opengames/reference.hpp"
#include "oracles/iteration_oracles.hpp"
#include "support/errors.hpp"
#include "support/random_games.hpp"

namespace og = opengames;
namespace ot = opengames::testing;
namespace oracle = opengames::oracle;

namespace {

constexpr og::Index kCC = 0;
constexpr og::Index kDC = 2;
constexpr og::Index kDD = 3;

struct Pd {
  og::Bimatrix m = og::PrisonersDilemma();
  og::IteratedGame g = og::IterateGame(og::BimatrixGame(m));
  og::StrategyTransducer grim = og::GrimTrigger(g.moves(), 4, kCC, kDD, {1, 2, 3});
  og::StrategyTransducer defect = og::AllConstant(g.moves(), 4, kDD);

  og::UtilityFunctional Discounted(double delta) const {
    return og::UtilityFunctional::Discounted(g.moves(), og::BimatrixPayoffs(m), delta);
  }
};

og::Bimatrix RandomBimatrix(ot::Rng& rng, std::size_t n1, std::size_t n2) {
  og::Bimatrix m{og::FinSet::Range("a", n1), og::FinSet::Range("b", n2), {}};
  for (std::size_t i = 0; i < n1 * n2; ++i) {
    m.payoff.push_back({ot::UniformReal(rng, -5, 5), ot::UniformReal(rng, -5, 5)});
  }
  return m;
}

}  // namespace

TEST_SUITE("iteration") {

TEST_CASE("grim trigger in the prisoner's dilemma") {
  const Pd pd;
  const og::Verdict patient = pd.g.GfpMembershipExact(pd.grim, pd.Discounted(0.9));
  CHECK(patient.status == og::VerdictStatus::kHolds);
  CHECK_FALSE(patient.depth_checked.has_value());
  CHECK_FALSE(patient.marginal);

  const og::Verdict impatient = pd.g.GfpMembershipExact(pd.grim, pd.Discounted(0.3));
  REQUIRE(impatient.status == og::VerdictStatus::kFails);
  REQUIRE(impatient.witness.has_value());
  CHECK(impatient.witness->history.empty());
  REQUIRE(impatient.witness->deviation.has_value());
  CHECK(pd.g.moves().label(*impatient.witness->deviation) == "D,C");
  CHECK(*impatient.witness->deviation == kDC);

  const og::Verdict bounded = pd.g.PhiCheck(pd.grim, pd.Discounted(0.3), 5);
  CHECK(bounded.status == og::VerdictStatus::kFails);
  CHECK(bounded.witness == impatient.witness);
  const og::Verdict bounded_ok = pd.g.PhiCheck(pd.grim, pd.Discounted(0.9), 8);
  CHECK(bounded_ok.status == og::VerdictStatus::kHolds);
  CHECK(bounded_ok.depth_checked == 8);

  // Cooperation is worth 3 / (1 - delta) against 5 + delta / (1 - delta):
  // a tie at one half.
  const og::Verdict edge = pd.g.GfpMembershipExact(pd.grim, pd.Discounted(0.5));
  CHECK(edge.status == og::VerdictStatus::kHolds);
  CHECK(edge.marginal);
}

TEST_CASE("always defecting is an equilibrium at every discount") {
  const Pd pd;
  for (double delta : {0.0, 0.1, 0.5, 0.9}) {
    CHECK(pd.g.GfpMembershipExact(pd.defect, pd.Discounted(delta)).status ==
          og::VerdictStatus::kHolds);
    CHECK(pd.g.PhiCheck(pd.defect, pd.Discounted(delta), 6).status ==
          og::VerdictStatus::kHolds);
  }
}

TEST_CASE("grim trigger threshold agrees with the one-deviation oracle") {
  const Pd pd;
  auto library = [&](double delta) {
    return pd.g.GfpMembershipExact(pd.grim, pd.Discounted(delta)).status ==
           og::VerdictStatus::kHolds;
  };
  auto direct = [&](double delta) {
    return oracle::OneDeviationBimatrix(2, 2, pd.m.payoff, pd.grim, delta).holds;
  };
  const double a = oracle::BisectThreshold(library, 0.45, 0.55);
  const double b = oracle::BisectThreshold(direct, 0.45, 0.55);
  CHECK(a == doctest::Approx(0.5).epsilon(2e-6));
  CHECK(b == doctest::Approx(0.5).epsilon(2e-6));
}

TEST_CASE("tit-for-tat needs patience against one-shot defection") {
  const Pd pd;
  const og::StrategyTransducer tft =
      og::TitForTat(pd.g.moves(), 4, kCC, og::SwappedProfileEcho(pd.m));
  for (double delta : {0.2, 0.55, 0.7, 0.95}) {
    const bool holds = pd.g.GfpMembershipExact(tft, pd.Discounted(delta)).status ==
                       og::VerdictStatus::kHolds;
    CHECK(holds == oracle::OneDeviationBimatrix(2, 2, pd.m.payoff, tft, delta).holds);
  }
}

TEST_CASE("exact membership matches the one-deviation oracle on random games") {
  ot::Rng rng = ot::MakeRng(601);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n1 = ot::Uniform(rng, 1, 2);
    const std::size_t n2 = ot::Uniform(rng, 1, 3);
    const og::Bimatrix m = RandomBimatrix(rng, n1, n2);
    const og::IteratedGame g = og::IterateGame(og::BimatrixGame(m));
    const std::size_t np = n1 * n2;
    const og::StrategyTransducer t = ot::RandomTransducer(rng, ot::Uniform(rng, 1, 5), np, np);
    const double delta = ot::UniformReal(rng, 0.05, 0.95);
    const og::UtilityFunctional k =
        og::UtilityFunctional::Discounted(g.moves(), og::BimatrixPayoffs(m), delta);
    const og::Verdict v = g.GfpMembershipExact(t, k);
    if (v.marginal) continue;
    ++compared;
    const oracle::DeviationCheck d = oracle::OneDeviationBimatrix(n1, n2, m.payoff, t, delta);
    CHECK((v.status == og::VerdictStatus::kHolds) == d.holds);
  }
  CHECK(compared > 100);
}

TEST_CASE("bounded checks are monotone and consistent with the exact verdict") {
  ot::Rng rng = ot::MakeRng(602);
  for (int trial = 0; trial < 100; ++trial) {
    const og::Bimatrix m = RandomBimatrix(rng, 2, 2);
    const og::IteratedGame g = og::IterateGame(og::BimatrixGame(m));
    const og::StrategyTransducer t = ot::RandomTransducer(rng, ot::Uniform(rng, 1, 5), 4, 4);
    const og::UtilityFunctional k = og::UtilityFunctional::Discounted(
        g.moves(), og::BimatrixPayoffs(m), ot::UniformReal(rng, 0.05, 0.95));
    const og::Verdict exact = g.GfpMembershipExact(t, k);
    bool failed = false;
    for (std::size_t d = 0; d <= 6; ++d) {
      const og::Verdict v = g.PhiCheck(t, k, d);
      CHECK(v.depth_checked.has_value());
      if (failed) CHECK(v.status == og::VerdictStatus::kFails);
      if (v.status == og::VerdictStatus::kFails) {
        failed = true;
        REQUIRE(exact.status == og::VerdictStatus::kFails);
        CHECK(v.witness == exact.witness);
        CHECK(exact.witness->history.size() < d);
      } else {
        CHECK(v.status == og::VerdictStatus::kHolds);
        if (exact.status == og::VerdictStatus::kFails) {
          CHECK(exact.witness->history.size() >= d);
        }
      }
    }
  }
}

TEST_CASE("depth zero holds trivially") {
  const Pd pd;
  const og::Verdict v = pd.g.PhiCheck(pd.grim, pd.Discounted(0.1), 0);
  CHECK(v.status == og::VerdictStatus::kHolds);
  CHECK(v.depth_checked == 0);
  CHECK(v.nodes_checked == 0);
}

TEST_CASE("finite horizons unravel cooperation at the last round") {
  const Pd pd;
  // With h rounds left cooperating earns 3h against 5 + (h - 1): strict
  // loss at h = 1, a tie at h = 2, so the first failure is after two
  // cooperative rounds.
  const og::UtilityFunctional k =
      og::UtilityFunctional::FiniteHorizon(pd.g.moves(), og::BimatrixPayoffs(pd.m), 3);
  CHECK(pd.g.PhiCheck(pd.grim, k, 2).status == og::VerdictStatus::kHolds);
  const og::Verdict v = pd.g.PhiCheck(pd.grim, k, 3);
  REQUIRE(v.status == og::VerdictStatus::kFails);
  CHECK(v.witness->history == og::StreamPrefix{kCC, kCC});
  CHECK(v.marginal);
  const og::UtilityFunctional mean =
      og::UtilityFunctional::MeanPayoffApprox(pd.g.moves(), og::BimatrixPayoffs(pd.m), 4);
  CHECK(pd.g.PhiCheck(pd.defect, mean, 3).approximate);
}

TEST_CASE("self-play streams match unrolled play") {
  ot::Rng rng = ot::MakeRng(603);
  const Pd pd;
  const std::vector<std::size_t> identity{0, 1, 2, 3};
  for (int trial = 0; trial < 50; ++trial) {
    const og::StrategyTransducer t = ot::RandomTransducer(rng, ot::Uniform(rng, 1, 6), 4, 4);
    const og::StreamPrefix w = pd.g.PlayStream(t, 30);
    CHECK(w == oracle::UnrolledPlay(t, identity, 30));
    const og::Lasso lasso = pd.g.PlayLasso(t);
    CHECK_FALSE(lasso.cycle.empty());
    CHECK(og::BisimCheck(og::LassoGenerator(lasso), og::PrefixGenerator(w), 30) ==
          std::nullopt);
    CHECK(og::DepthTable::FromTransducer(t, 4).At(og::StreamPrefix(w.begin(), w.begin() + 3)) ==
          t.StageAt(og::StreamPrefix(w.begin(), w.begin() + 3)));
  }
  CHECK(pd.g.PlayStream(pd.grim, 3) == og::StreamPrefix{kCC, kCC, kCC});
  CHECK(og::Hd(og::StreamPrefix{kDC, kDD}) == kDC);
  CHECK(og::Tl(og::StreamPrefix{kDC, kDD}) == og::StreamPrefix{kDD});
  CHECK(og::BisimCheck(og::PrefixGenerator({0, 1, 2}), og::PrefixGenerator({0, 1, 3}), 3) == 2);
}

TEST_CASE("parallel and reference checks agree") {
  ot::Rng rng = ot::MakeRng(604);
  og::SetNumThreads(4);
  for (int trial = 0; trial < 40; ++trial) {
    const og::Bimatrix m = RandomBimatrix(rng, 2, 2);
    const og::IteratedGame g = og::IterateGame(og::BimatrixGame(m));
    const og::StrategyTransducer t = ot::RandomTransducer(rng, ot::Uniform(rng, 1, 6), 4, 4);
    const og::UtilityFunctional k = og::UtilityFunctional::Discounted(
        g.moves(), og::BimatrixPayoffs(m), ot::UniformReal(rng, 0.05, 0.95));
    CHECK(g.GfpMembershipExact(t, k) == og::reference::GfpMembershipExact(g, t, k));
    CHECK(g.PhiCheck(t, k, 5) == og::reference::PhiCheck(g, t, k, 5, {}));
  }
  og::SetNumThreads(1);
}

TEST_CASE("preconditions of the exact procedure") {
  const Pd pd;
  const og::UtilityFunctional finite =
      og::UtilityFunctional::FiniteHorizon(pd.g.moves(), og::BimatrixPayoffs(pd.m), 3);
  CHECK(ot::KindOf([&] { pd.g.GfpMembershipExact(pd.grim, finite); }) ==
        og::ErrorKind::kUnsupportedUtility);
  const og::IteratedGame tg = og::IterateGame(ot::UnflaggedArgmax(og::FinSet({"l", "r"})));
  const og::UtilityFunctional k =
      og::UtilityFunctional::Discounted(tg.moves(), {{0}, {1}}, 0.5);
  CHECK(ot::KindOf([&] { tg.GfpMembershipExact(og::AllConstant(tg.moves(), 2, 1), k); }) ==
        og::ErrorKind::kNotAffineInvariant);
  CHECK(ot::KindOf([&] {
          pd.g.PhiCheck(og::AllConstant(og::FinSet::Range("y", 3), 4, 0), pd.Discounted(0.5), 2);
        }) == og::ErrorKind::kSchemaError);
  CHECK(ot::KindOf([&] { og::AllConstant(pd.g.moves(), 4, 7); }) ==
        og::ErrorKind::kUnknownMove);
  const og::UtilityFunctional other =
      og::UtilityFunctional::Discounted(og::FinSet::Range("y", 4), og::BimatrixPayoffs(pd.m), 0.5);
  CHECK(ot::KindOf([&] { pd.g.PhiCheck(pd.grim, other, 2); }) ==
        og::ErrorKind::kBoundaryMismatch);
}

}  // TEST_SUITE
