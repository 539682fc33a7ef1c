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

#include "opengames/two_cells.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>

#include "opengames/conditioning.hpp"
#include "opengames/error.hpp"
#include "opengames/parallel.hpp"
#include "opengames/reference.hpp"

namespace opengames {
namespace {

bool SameValues(std::span<const double> a, std::span<const double> b) {
  return std::ranges::equal(a, b);
}

std::vector<Value> ProbeValues(std::size_t dim) {
  std::vector<Value> probes;
  probes.push_back(Value(dim, 0.0));
  for (std::size_t d = 0; d < dim; ++d) {
    Value e(dim, 0.0);
    e[d] = 1.0;
    probes.push_back(std::move(e));
  }
  Value mixed(dim);
  for (std::size_t d = 0; d < dim; ++d) mixed[d] = -1.75 + 3.1 * d;
  probes.push_back(std::move(mixed));
  return probes;
}

}  // namespace

CoutilityFreeGame::CoutilityFreeGame(OpenGame game) : game_(std::move(game)) {
  if (game_.dom().points.size() != 1) {
    Fail(ErrorKind::kSchemaError, "coutility-free games have one state");
  }
  if (game_.dom().values != game_.cod().values) {
    Fail(ErrorKind::kSchemaError, "coutility-free games need S = R");
  }
  const ValueSet& r = game_.cod().values;
  std::vector<Value> probes;
  if (r.is_finite()) {
    for (Index i = 0; i < r.size(); ++i) {
      probes.emplace_back(r.value(i).begin(), r.value(i).end());
    }
  } else {
    probes = ProbeValues(r.dim());
  }
  for (Index sigma = 0; sigma < game_.strategies().size(); ++sigma) {
    for (const auto& v : probes) {
      if (!SameValues(game_.Coutility(sigma, 0, v), v)) {
        Fail(ErrorKind::kSchemaError,
             "coutility of strategy '" + game_.strategies().label(sigma) +
                 "' is not the identity on R");
      }
    }
  }
}

GameMorphism IdentityMorphism(const OpenGame& g) {
  GameMorphism alpha;
  alpha.alpha_y.resize(g.cod().points.size());
  alpha.alpha_sigma.resize(g.strategies().size());
  for (Index y = 0; y < alpha.alpha_y.size(); ++y) alpha.alpha_y[y] = y;
  for (Index s = 0; s < alpha.alpha_sigma.size(); ++s) alpha.alpha_sigma[s] = s;
  return alpha;
}

GameMorphism ComposeMorphisms(const GameMorphism& beta,
                              const GameMorphism& alpha) {
  GameMorphism out;
  out.alpha_y.reserve(alpha.alpha_y.size());
  for (Index y : alpha.alpha_y) out.alpha_y.push_back(beta.alpha_y.at(y));
  out.alpha_sigma.reserve(alpha.alpha_sigma.size());
  for (Index s : alpha.alpha_sigma) {
    out.alpha_sigma.push_back(beta.alpha_sigma.at(s));
  }
  return out;
}

namespace {

struct CheckPlan {
  std::size_t nsigma = 0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::size_t ny2 = 0;
  std::size_t kcount = 0;
  bool sampled = false;
};

CheckPlan Prepare(const GameMorphism& alpha, const OpenGame& g,
                  const OpenGame& g2, const MorphismCheckOptions& options) {
  if (g.dom().points != g2.dom().points) {
    Fail(ErrorKind::kBoundaryMismatch, "morphism endpoints differ in states");
  }
  if (g.cod().values != g2.cod().values) {
    Fail(ErrorKind::kBoundaryMismatch, "morphism endpoints differ in R");
  }
  CheckPlan plan;
  plan.nsigma = g.strategies().size();
  plan.nx = g.dom().points.size();
  plan.ny = g.cod().points.size();
  plan.ny2 = g2.cod().points.size();
  if (alpha.alpha_y.size() != plan.ny ||
      alpha.alpha_sigma.size() != plan.nsigma) {
    Fail(ErrorKind::kInvalidArgument, "morphism tables have the wrong length");
  }
  for (Index y : alpha.alpha_y) {
    if (y >= plan.ny2) Fail(ErrorKind::kInvalidArgument, "alpha_Y out of range");
  }
  for (Index s : alpha.alpha_sigma) {
    if (s >= g2.strategies().size()) {
      Fail(ErrorKind::kInvalidArgument, "alpha_Sigma out of range");
    }
  }
  if (options.sample) {
    plan.sampled = true;
    plan.kcount = options.sample->size();
    for (const auto& k : *options.sample) {
      if (k.size() != plan.ny2 || k.dim() != g.cod().values.dim()) {
        Fail(ErrorKind::kInvalidArgument,
             "sampled continuations must be tables Y' -> R");
      }
    }
  } else {
    auto count =
        ContinuationCount(g.cod().values, plan.ny2, options.guard);
    if (!count) {
      Fail(ErrorKind::kEnumerationTooLarge,
           g.cod().values.is_finite()
               ? "|R|^|Y'| exceeds the enumeration guard"
               : "R is not finite; supply a continuation sample");
    }
    plan.kcount = *count;
  }
  return plan;
}

std::optional<MorphismCounterexample> FirstPlayViolation(
    const GameMorphism& alpha, const OpenGame& g, const OpenGame& g2,
    const CheckPlan& plan) {
  for (Index sigma = 0; sigma < plan.nsigma; ++sigma) {
    for (Index x = 0; x < plan.nx; ++x) {
      if (alpha.alpha_y[g.Play(sigma, x)] !=
          g2.Play(alpha.alpha_sigma[sigma], x)) {
        return MorphismCounterexample{MorphismCondition::kPlay, sigma, x,
                                      std::nullopt, 0};
      }
    }
  }
  return std::nullopt;
}

Continuation KAt(const OpenGame& g, const CheckPlan& plan,
                 const MorphismCheckOptions& options, std::size_t index) {
  if (plan.sampled) return (*options.sample)[index];
  return Continuation::Enumerated(g.cod().values, plan.ny2, index);
}

Continuation PullBack(const Continuation& k, const GameMorphism& alpha) {
  Continuation pulled(alpha.alpha_y.size(), k.dim());
  for (Index y = 0; y < alpha.alpha_y.size(); ++y) {
    pulled.Set(y, k[alpha.alpha_y[y]]);
  }
  return pulled;
}

// Condition (ii) at flattened position ((sigma * nx) + x) * kcount + kidx.
bool EquilibriumTransported(const GameMorphism& alpha, const OpenGame& g,
                            const OpenGame& g2, Index sigma, Index x,
                            const Continuation& k, double tol) {
  if (!g.Equilibrium(x, PullBack(k, alpha), sigma, tol)) return true;
  return g2.Equilibrium(x, k, alpha.alpha_sigma[sigma], tol);
}

MorphismCheck Finish(const OpenGame& g,
                     const CheckPlan& plan,
                     const MorphismCheckOptions& options,
                     std::optional<std::uint64_t> failing) {
  MorphismCheck result;
  result.sampled = plan.sampled;
  result.continuations_checked = plan.kcount;
  if (failing) {
    const std::uint64_t kidx = *failing % plan.kcount;
    const std::uint64_t rest = *failing / plan.kcount;
    MorphismCounterexample cx;
    cx.condition = MorphismCondition::kEquilibrium;
    cx.sigma = rest / plan.nx;
    cx.state = rest % plan.nx;
    cx.k = KAt(g, plan, options, kidx);
    cx.k_index = kidx;
    result.passed = false;
    result.counterexample = std::move(cx);
  }
  return result;
}

}  // namespace

MorphismCheck CheckMorphism(const GameMorphism& alpha, const OpenGame& g,
                            const OpenGame& g2,
                            const MorphismCheckOptions& options) {
  const CheckPlan plan = Prepare(alpha, g, g2, options);
  if (auto cx = FirstPlayViolation(alpha, g, g2, plan)) {
    MorphismCheck result;
    result.passed = false;
    result.sampled = plan.sampled;
    result.counterexample = std::move(cx);
    return result;
  }
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr failure;

  // Continuation-major blocks: each k is materialized once per block and
  // checked against every (sigma, x). Workers skip positions beyond the best
  // violation found so far, and the minimum is the lexicographically first.
#pragma omp parallel for num_threads(NumThreads()) schedule(dynamic, 8)
  for (std::int64_t kk = 0; kk < static_cast<std::int64_t>(plan.kcount); ++kk) {
    try {
      const std::uint64_t kidx = static_cast<std::uint64_t>(kk);
      if (kidx > best.load(std::memory_order_relaxed)) continue;
      const Continuation k = KAt(g, plan, options, kidx);
      for (Index sigma = 0; sigma < plan.nsigma; ++sigma) {
        for (Index x = 0; x < plan.nx; ++x) {
          const std::uint64_t pos =
              (static_cast<std::uint64_t>(sigma) * plan.nx + x) * plan.kcount +
              kidx;
          if (pos >= best.load(std::memory_order_relaxed)) break;
          if (!EquilibriumTransported(alpha, g, g2, sigma, x, k,
                                      options.tolerance)) {
            std::uint64_t cur = best.load();
            while (pos < cur && !best.compare_exchange_weak(cur, pos)) {
            }
            break;
          }
        }
      }
    } catch (...) {
#pragma omp critical(opengames_check_morphism)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::optional<std::uint64_t> failing;
  if (best.load() != kNone) failing = best.load();
  return Finish(g, plan, options, failing);
}

MorphismCheck CheckMorphism(const GameMorphism& alpha,
                            const CoutilityFreeGame& g,
                            const CoutilityFreeGame& g2,
                            const MorphismCheckOptions& options) {
  return CheckMorphism(alpha, g.game(), g2.game(), options);
}

namespace reference {

MorphismCheck CheckMorphism(const GameMorphism& alpha, const OpenGame& g,
                            const OpenGame& g2,
                            const MorphismCheckOptions& options) {
  const CheckPlan plan = Prepare(alpha, g, g2, options);
  if (auto cx = FirstPlayViolation(alpha, g, g2, plan)) {
    MorphismCheck result;
    result.passed = false;
    result.sampled = plan.sampled;
    result.counterexample = std::move(cx);
    return result;
  }
  for (Index sigma = 0; sigma < plan.nsigma; ++sigma) {
    for (Index x = 0; x < plan.nx; ++x) {
      for (std::size_t kidx = 0; kidx < plan.kcount; ++kidx) {
        const Continuation k = KAt(g, plan, options, kidx);
        if (!EquilibriumTransported(alpha, g, g2, sigma, x, k,
                                    options.tolerance)) {
          return Finish(g, plan, options,
                        (static_cast<std::uint64_t>(sigma) * plan.nx + x) *
                                plan.kcount +
                            kidx);
        }
      }
    }
  }
  return Finish(g, plan, options, std::nullopt);
}

}  // namespace reference

CoutilityFreeGame FgObject(const CoutilityFreeGame& g,
                           const CoutilityFreeGame& h, std::size_t guard) {
  if (g.utilities() != h.utilities()) {
    Fail(ErrorKind::kBoundaryMismatch, "F_G needs games over the same R");
  }
  // Y -> h has states Y x 1, identified with Y.
  OpenGame conditioned =
      Condition(g.moves(), h.game(), guard).WithStates(g.moves());
  return CoutilityFreeGame(Compose(g.game(), conditioned));
}

Index EncodeFgStrategy(Index sigma, const std::vector<Index>& f,
                       std::size_t inner_strategies) {
  auto tables = CheckedPower(inner_strategies, f.size(),
                             std::numeric_limits<std::size_t>::max());
  return sigma * tables.value() + EncodeTable(f, inner_strategies);
}

std::pair<Index, std::vector<Index>> DecodeFgStrategy(
    Index code, std::size_t moves, std::size_t inner_strategies) {
  auto tables = CheckedPower(inner_strategies, moves,
                             std::numeric_limits<std::size_t>::max())
                    .value();
  if (tables == 0) {
    Fail(ErrorKind::kInvalidArgument, "F_G(h) has no strategies");
  }
  return {code / tables, DecodeTable(code % tables, moves, inner_strategies)};
}

GameMorphism FgMorphism(const CoutilityFreeGame& g, const GameMorphism& alpha,
                        const CoutilityFreeGame& h,
                        const CoutilityFreeGame& h2,
                        const MorphismCheckOptions& options) {
  if (g.utilities() != h.utilities() || h.utilities() != h2.utilities()) {
    Fail(ErrorKind::kBoundaryMismatch, "F_G needs games over the same R");
  }
  auto check = CheckMorphism(alpha, h, h2, options);
  if (!check.passed) {
    Fail(ErrorKind::kInvalidMorphism,
         "input pair is not a morphism between the given games");
  }
  const std::size_t ny = g.moves().size();
  const std::size_t ng = g.strategies().size();
  const std::size_t nz = h.moves().size();
  const std::size_t nz2 = h2.moves().size();
  const std::size_t nh = h.strategies().size();
  const std::size_t nh2 = h2.strategies().size();
  auto tables = CheckedPower(nh, ny, options.guard);
  if (!tables || !CheckedPower(nh2, ny, options.guard)) {
    Fail(ErrorKind::kEnumerationTooLarge, "strategy tables exceed the guard");
  }

  GameMorphism out;
  out.alpha_y.resize(ny * nz);
  for (Index y = 0; y < ny; ++y) {
    for (Index z = 0; z < nz; ++z) {
      out.alpha_y[y * nz + z] = y * nz2 + alpha.alpha_y[z];
    }
  }
  out.alpha_sigma.resize(ng * *tables);
  for (Index sigma = 0; sigma < ng; ++sigma) {
    for (Index f = 0; f < *tables; ++f) {
      auto table = DecodeTable(f, ny, nh);
      for (auto& s : table) s = alpha.alpha_sigma[s];
      out.alpha_sigma[sigma * *tables + f] = EncodeFgStrategy(sigma, table, nh2);
    }
  }
  return out;
}

}  // namespace opengames
