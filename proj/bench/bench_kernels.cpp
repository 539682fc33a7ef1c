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


// OpenMP kernels against their serial reference versions. Benchmarks with a
// thread count in the name run the parallel kernel; /serial runs the
// reference one.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "opengames/game_library.hpp"
#include "opengames/iteration.hpp"
#include "opengames/parallel.hpp"
#include "opengames/reference.hpp"
#include "opengames/two_cells.hpp"

namespace og = opengames;

namespace {

constexpr int kSerial = 0;

og::Bimatrix RandomBimatrix(std::size_t n1, std::size_t n2, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> payoff(-5.0, 5.0);
  og::Bimatrix m{og::FinSet::Range("a", n1), og::FinSet::Range("b", n2), {}};
  for (std::size_t i = 0; i < n1 * n2; ++i) m.payoff.push_back({payoff(rng), payoff(rng)});
  return m;
}

// One decision over `moves` with utilities in a finite numeric carrier.
og::OpenGame FiniteChooser(const og::FinSet& moves, const og::ValueSet& r) {
  std::vector<og::Index> play(moves.size());
  for (og::Index y = 0; y < moves.size(); ++y) play[y] = y;
  return og::OpenGame(og::Boundary{og::FinSet::Unit(), r}, og::Boundary{moves, r}, moves, play,
                      og::PassthroughCoutility(),
                      og::ArgmaxEquilibrium(play, 1, moves.size()),
                      og::GameTraits{.passthrough_coutility = true});
}

// Scalar argmax over the reals without affine invariance, so bounded checks
// keep every history apart.
og::IteratedGame UnmergedStage(std::size_t moves) {
  const og::FinSet ys = og::FinSet::Range("y", moves);
  std::vector<og::Index> play(moves);
  for (og::Index y = 0; y < moves; ++y) play[y] = y;
  const og::ValueSet reals = og::ValueSet::Real(1);
  return og::IterateGame(og::CoutilityFreeGame(og::OpenGame(
      og::Boundary{og::FinSet::Unit(), reals}, og::Boundary{ys, reals}, ys, play,
      og::PassthroughCoutility(), og::ArgmaxEquilibrium(play, 1, moves),
      og::GameTraits{.passthrough_coutility = true})));
}

og::StrategyTransducer RandomMachine(std::size_t states, std::size_t moves,
                                     std::size_t strategies, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<og::Index> s(0, strategies - 1);
  std::uniform_int_distribution<og::Index> q(0, states - 1);
  std::vector<og::Index> stage(states);
  std::vector<og::Index> step(states * moves);
  for (og::Index& v : stage) v = s(rng);
  for (og::Index& v : step) v = q(rng);
  return og::StrategyTransducer(og::FinSet::Range("q", states), 0, std::move(stage),
                                std::move(step), moves);
}

void Threads(const benchmark::State& state) {
  og::SetNumThreads(state.range(0) == kSerial ? 1 : static_cast<int>(state.range(0)));
}

void Arguments(benchmark::internal::Benchmark* b) {
  b->ArgName("threads")->Arg(kSerial)->Arg(1)->Arg(2)->Arg(4)->Arg(8);
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

void BM_EquilibriumSet(benchmark::State& state) {
  Threads(state);
  const og::Bimatrix m = RandomBimatrix(120, 120, 1);
  const og::CoutilityFreeGame g = og::BimatrixGame(m);
  const og::Continuation k = og::BimatrixContinuation(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == kSerial
                                 ? og::reference::EquilibriumSet(g.game(), 0, k)
                                 : og::EquilibriumSet(g.game(), 0, k));
  }
}
BENCHMARK(BM_EquilibriumSet)->Apply(Arguments);

void BM_CheckMorphism(benchmark::State& state) {
  Threads(state);
  const og::OpenGame g = FiniteChooser(og::FinSet::Range("y", 7),
                                       og::ValueSet::Numeric({0, 1, 2, 3, 4, 5}));
  const og::GameMorphism id = og::IdentityMorphism(g);
  const og::MorphismCheckOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == kSerial
                                 ? og::reference::CheckMorphism(id, g, g, options)
                                 : og::CheckMorphism(id, g, g, options));
  }
}
BENCHMARK(BM_CheckMorphism)->Apply(Arguments);

void BM_PhiCheck(benchmark::State& state) {
  Threads(state);
  const og::IteratedGame g = UnmergedStage(3);
  const og::StrategyTransducer t = og::AllConstant(g.moves(), 3, 2);
  const og::UtilityFunctional k =
      og::UtilityFunctional::Discounted(g.moves(), {{0}, {1}, {2}}, 0.8);
  og::PhiOptions options;
  options.node_budget = 1u << 24;
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == kSerial
                                 ? og::reference::PhiCheck(g, t, k, 10, options)
                                 : g.PhiCheck(t, k, 10, options));
  }
}
BENCHMARK(BM_PhiCheck)->Apply(Arguments);

void BM_GfpMembershipExact(benchmark::State& state) {
  Threads(state);
  const og::Bimatrix m = RandomBimatrix(6, 6, 2);
  const og::IteratedGame g = og::IterateGame(og::BimatrixGame(m));
  const og::StrategyTransducer t = RandomMachine(200, g.moves().size(), 36, 3);
  const og::UtilityFunctional k =
      og::UtilityFunctional::Discounted(g.moves(), og::BimatrixPayoffs(m), 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == kSerial
                                 ? og::reference::GfpMembershipExact(g, t, k)
                                 : g.GfpMembershipExact(t, k));
  }
}
BENCHMARK(BM_GfpMembershipExact)->Apply(Arguments);

}  // namespace

BENCHMARK_MAIN();
