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

#include "opengames/open_game.hpp"

#include <algorithm>

#include "opengames/error.hpp"
#include "opengames/parallel.hpp"
#include "opengames/reference.hpp"

namespace opengames {

OpenGame::OpenGame(Boundary dom, Boundary cod, FinSet strategies,
                   std::vector<Index> play, CoutilityFn coutility,
                   EquilibriumFn equilibrium, GameTraits traits,
                   DeviationFn deviation) {
  if (play.size() != strategies.size() * dom.points.size()) {
    Fail(ErrorKind::kSchemaError, "play table must cover Sigma x X");
  }
  for (Index y : play) {
    if (y >= cod.points.size()) {
      Fail(ErrorKind::kSchemaError, "play table names a move outside Y");
    }
  }
  if (!coutility || !equilibrium) {
    Fail(ErrorKind::kInvalidArgument, "coutility and equilibrium are required");
  }
  if (traits.passthrough_coutility && dom.values != cod.values) {
    Fail(ErrorKind::kBoundaryMismatch, "pass-through coutility needs S = R");
  }
  impl_ = std::make_shared<const Impl>(
      Impl{std::move(dom), std::move(cod), std::move(strategies),
           std::move(play), std::move(coutility), std::move(equilibrium),
           std::move(traits), std::move(deviation)});
}

Value OpenGame::Coutility(Index sigma, Index x, std::span<const double> r) const {
  return impl_->coutility(sigma, x, r);
}

namespace {

void CheckContinuation(const OpenGame& g, Index x, const Continuation& k,
                       Index sigma) {
  if (x >= g.dom().points.size() || sigma >= g.strategies().size()) {
    Fail(ErrorKind::kInvalidArgument, "state or strategy out of range");
  }
  if (k.size() != g.cod().points.size() || k.dim() != g.cod().values.dim()) {
    Fail(ErrorKind::kInvalidArgument,
         "continuation must be a total table Y -> R");
  }
}

}  // namespace

bool OpenGame::Equilibrium(Index x, const Continuation& k, Index sigma,
                           double tolerance) const {
  CheckContinuation(*this, x, k, sigma);
  return impl_->equilibrium(x, k, sigma, tolerance);
}

std::optional<DeviationProbe> OpenGame::Deviation(Index x,
                                                  const Continuation& k,
                                                  Index sigma) const {
  if (!impl_->deviation) return std::nullopt;
  CheckContinuation(*this, x, k, sigma);
  return impl_->deviation(x, k, sigma);
}

OpenGame OpenGame::WithStates(FinSet states) const {
  if (states.size() != dom().points.size()) {
    Fail(ErrorKind::kBoundaryMismatch, "relabelled state set changes size");
  }
  Boundary dom{std::move(states), impl_->dom.values};
  return OpenGame(std::move(dom), impl_->cod, impl_->strategies, impl_->play,
                  impl_->coutility, impl_->equilibrium, impl_->traits,
                  impl_->deviation);
}

CoutilityFn PassthroughCoutility() {
  return [](Index, Index, std::span<const double> r) {
    return Value(r.begin(), r.end());
  };
}

OpenGame IdentityGame(const FinSet& states, const ValueSet& coutilities) {
  std::vector<Index> play(states.size());
  for (Index x = 0; x < states.size(); ++x) play[x] = x;
  Boundary side{states, coutilities};
  return OpenGame(side, side, FinSet({"•"}), std::move(play),
                  PassthroughCoutility(),
                  [](Index, const Continuation&, Index, double) { return true; },
                  GameTraits{.passthrough_coutility = true,
                             .affine_invariant = true,
                             .builtin = "all"});
}

OpenGame UnitGame() { return IdentityGame(FinSet::Unit(), ValueSet::Unit()); }

OpenGame Compose(const OpenGame& g, const OpenGame& h) {
  if (g.cod().points != h.dom().points) {
    Fail(ErrorKind::kBoundaryMismatch,
         "moves of the first game differ from states of the second");
  }
  if (g.cod().values != h.dom().values) {
    Fail(ErrorKind::kBoundaryMismatch,
         "utilities of the first game differ from coutilities of the second");
  }
  const std::size_t nx = g.dom().points.size();
  const std::size_t ng = g.strategies().size();
  const std::size_t nh = h.strategies().size();

  std::vector<Index> play(ng * nh * nx);
  for (Index i = 0; i < ng; ++i) {
    for (Index j = 0; j < nh; ++j) {
      for (Index x = 0; x < nx; ++x) {
        play[(i * nh + j) * nx + x] = h.Play(j, g.Play(i, x));
      }
    }
  }

  auto coutility = [g, h, nh](Index sigma, Index x, std::span<const double> q) {
    const Index i = sigma / nh;
    const Index j = sigma % nh;
    const Value s = h.Coutility(j, g.Play(i, x), q);
    return g.Coutility(i, x, s);
  };

  // (i, j) in E(x, k) iff i in E_g(x, k') with
  // k'(y) = C_h(j, y, k(P_h(j, y))), and j in E_h(P_g(i', x), k) for every i'.
  auto equilibrium = [g, h, nh, ng](Index x, const Continuation& k,
                                    Index sigma, double tol) {
    const Index i = sigma / nh;
    const Index j = sigma % nh;
    for (Index other = 0; other < ng; ++other) {
      if (!h.Equilibrium(g.Play(other, x), k, j, tol)) return false;
    }
    const std::size_t ny = g.cod().points.size();
    Continuation pulled(ny, g.cod().values.dim());
    for (Index y = 0; y < ny; ++y) {
      pulled.Set(y, h.Coutility(j, y, k[h.Play(j, y)]));
    }
    return g.Equilibrium(x, pulled, i, tol);
  };

  GameTraits traits;
  traits.passthrough_coutility =
      g.traits().passthrough_coutility && h.traits().passthrough_coutility;
  traits.affine_invariant = g.traits().affine_invariant &&
                            h.traits().affine_invariant &&
                            h.traits().passthrough_coutility;
  return OpenGame(g.dom(), h.cod(), Product(g.strategies(), h.strategies()),
                  std::move(play), std::move(coutility),
                  std::move(equilibrium), std::move(traits));
}

OpenGame Tensor(const OpenGame& g, const OpenGame& h) {
  const std::size_t nx1 = g.dom().points.size();
  const std::size_t nx2 = h.dom().points.size();
  const std::size_t ny1 = g.cod().points.size();
  const std::size_t ny2 = h.cod().points.size();
  const std::size_t ng = g.strategies().size();
  const std::size_t nh = h.strategies().size();
  const std::size_t r1 = g.cod().values.dim();
  const std::size_t r2 = h.cod().values.dim();

  std::vector<Index> play(ng * nh * nx1 * nx2);
  for (Index i = 0; i < ng; ++i) {
    for (Index j = 0; j < nh; ++j) {
      for (Index x1 = 0; x1 < nx1; ++x1) {
        for (Index x2 = 0; x2 < nx2; ++x2) {
          play[(i * nh + j) * (nx1 * nx2) + x1 * nx2 + x2] =
              g.Play(i, x1) * ny2 + h.Play(j, x2);
        }
      }
    }
  }

  auto coutility = [g, h, nh, nx2, r1](Index sigma, Index x,
                                       std::span<const double> r) {
    Value s = g.Coutility(sigma / nh, x / nx2, r.first(r1));
    Value s2 = h.Coutility(sigma % nh, x % nx2, r.subspan(r1));
    s.insert(s.end(), s2.begin(), s2.end());
    return s;
  };

  // The two continuations each component sees, with the other component's
  // move fixed by its strategy.
  struct Split {
    Continuation first;
    Continuation second;
  };
  auto split = [g, h, nh, nx2, ny1, ny2, r1, r2](Index x, const Continuation& k,
                                                 Index sigma) {
    const Index i = sigma / nh;
    const Index j = sigma % nh;
    const Index y1_played = g.Play(i, x / nx2);
    const Index y2_played = h.Play(j, x % nx2);
    Split out{Continuation(ny1, r1), Continuation(ny2, r2)};
    for (Index y1 = 0; y1 < ny1; ++y1) {
      out.first.Set(y1, k[y1 * ny2 + y2_played].first(r1));
    }
    for (Index y2 = 0; y2 < ny2; ++y2) {
      out.second.Set(y2, k[y1_played * ny2 + y2].subspan(r1));
    }
    return out;
  };

  auto equilibrium = [g, h, nh, nx2, split](Index x, const Continuation& k,
                                            Index sigma, double tol) {
    Split parts = split(x, k, sigma);
    return g.Equilibrium(x / nx2, parts.first, sigma / nh, tol) &&
           h.Equilibrium(x % nx2, parts.second, sigma % nh, tol);
  };

  DeviationFn deviation;
  if (g.has_deviation_probe() && h.has_deviation_probe()) {
    deviation = [g, h, nh, nx2, split](Index x, const Continuation& k,
                                       Index sigma) {
      Split parts = split(x, k, sigma);
      const Index i = sigma / nh;
      const Index j = sigma % nh;
      DeviationProbe a = *g.Deviation(x / nx2, parts.first, i);
      DeviationProbe b = *h.Deviation(x % nx2, parts.second, j);
      DeviationProbe out;
      if (a.gain >= b.gain) {
        out.gain = a.gain;
        if (a.deviation) out.deviation = *a.deviation * nh + j;
      } else {
        out.gain = b.gain;
        if (b.deviation) out.deviation = i * nh + *b.deviation;
      }
      return out;
    };
  }

  GameTraits traits;
  traits.passthrough_coutility =
      g.traits().passthrough_coutility && h.traits().passthrough_coutility;
  traits.affine_invariant =
      g.traits().affine_invariant && h.traits().affine_invariant;
  return OpenGame(
      Boundary{Product(g.dom().points, h.dom().points),
               Product(g.dom().values, h.dom().values)},
      Boundary{Product(g.cod().points, h.cod().points),
               Product(g.cod().values, h.cod().values)},
      Product(g.strategies(), h.strategies()), std::move(play),
      std::move(coutility), std::move(equilibrium), std::move(traits),
      std::move(deviation));
}

std::vector<Index> EquilibriumSet(const OpenGame& g, Index x,
                                  const Continuation& k, double tolerance) {
  const std::size_t n = g.strategies().size();
  std::vector<char> member(n, 0);
  // Decision procedures may throw (e.g. a value outside a tabulated carrier);
  // the first failure is rethrown after the parallel region.
  std::exception_ptr failure;
#pragma omp parallel for num_threads(NumThreads()) schedule(dynamic, 16)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
    try {
      member[s] = g.Equilibrium(x, k, static_cast<Index>(s), tolerance);
    } catch (...) {
#pragma omp critical(opengames_equilibrium_set)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Index> out;
  for (Index s = 0; s < n; ++s) {
    if (member[s]) out.push_back(s);
  }
  return out;
}

namespace reference {

std::vector<Index> EquilibriumSet(const OpenGame& g, Index x,
                                  const Continuation& k, double tolerance) {
  std::vector<Index> out;
  for (Index s = 0; s < g.strategies().size(); ++s) {
    if (g.Equilibrium(x, k, s, tolerance)) out.push_back(s);
  }
  return out;
}

}  // namespace reference

std::size_t ContinuationCode(const ValueSet& carrier, const Continuation& k) {
  std::size_t code = 0;
  for (Index y = 0; y < k.size(); ++y) {
    code = code * carrier.size() + carrier.IndexOf(k[y]);
  }
  return code;
}

OpenGame TabulatedGame(Boundary dom, Boundary cod, FinSet strategies,
                       GameTables tables) {
  if (!dom.values.is_finite() || !cod.values.is_finite()) {
    Fail(ErrorKind::kSchemaError, "tabulated games need finite S and R");
  }
  const std::size_t nx = dom.points.size();
  const std::size_t nr = cod.values.size();
  const std::size_t ns = strategies.size();
  auto kcount = ContinuationCount(cod.values, cod.points.size(),
                                  kDefaultEnumerationGuard);
  if (!kcount) {
    Fail(ErrorKind::kEnumerationTooLarge, "|R|^|Y| too large to tabulate");
  }
  if (tables.coutility.size() != ns * nx * nr) {
    Fail(ErrorKind::kSchemaError, "coutility table must cover Sigma x X x R");
  }
  for (Index s : tables.coutility) {
    if (s >= dom.values.size()) {
      Fail(ErrorKind::kSchemaError, "coutility table names a value outside S");
    }
  }
  if (tables.equilibrium.size() != nx * *kcount * ns) {
    Fail(ErrorKind::kSchemaError,
         "equilibrium table must cover X x (Y -> R) x Sigma");
  }
  auto shared = std::make_shared<const GameTables>(std::move(tables));
  const ValueSet s_values = dom.values;
  const ValueSet r_values = cod.values;
  auto coutility = [shared, s_values, r_values, nx, nr](
                       Index sigma, Index x, std::span<const double> r) {
    const Index ri = r_values.IndexOf(r);
    const Index si = shared->coutility[(sigma * nx + x) * nr + ri];
    auto v = s_values.value(si);
    return Value(v.begin(), v.end());
  };
  const std::size_t kc = *kcount;
  auto equilibrium = [shared, r_values, kc, ns](Index x, const Continuation& k,
                                                Index sigma, double) {
    const std::size_t code = ContinuationCode(r_values, k);
    return shared->equilibrium[(x * kc + code) * ns + sigma] != 0;
  };
  std::vector<Index> play = shared->play;
  GameTraits traits;
  bool passthrough = dom.values == cod.values;
  if (passthrough) {
    for (Index sigma = 0; sigma < ns && passthrough; ++sigma) {
      for (Index x = 0; x < nx && passthrough; ++x) {
        for (Index r = 0; r < nr; ++r) {
          if (shared->coutility[(sigma * nx + x) * nr + r] != r) {
            passthrough = false;
            break;
          }
        }
      }
    }
  }
  traits.passthrough_coutility = passthrough;
  return OpenGame(std::move(dom), std::move(cod), std::move(strategies),
                  std::move(play), std::move(coutility),
                  std::move(equilibrium), std::move(traits));
}

GameTables Tabulate(const OpenGame& g, std::size_t guard) {
  const auto& S = g.dom().values;
  const auto& R = g.cod().values;
  if (!S.is_finite() || !R.is_finite()) {
    Fail(ErrorKind::kEnumerationTooLarge,
         "games over real-valued carriers cannot be tabulated");
  }
  const std::size_t nx = g.dom().points.size();
  const std::size_t ny = g.cod().points.size();
  const std::size_t ns = g.strategies().size();
  auto kcount = ContinuationCount(R, ny, guard);
  if (!kcount || nx * ns > guard / std::max<std::size_t>(*kcount, 1)) {
    Fail(ErrorKind::kEnumerationTooLarge,
         "equilibrium table exceeds the guard of " + std::to_string(guard));
  }
  GameTables tables;
  tables.play.resize(ns * nx);
  tables.coutility.resize(ns * nx * R.size());
  for (Index sigma = 0; sigma < ns; ++sigma) {
    for (Index x = 0; x < nx; ++x) {
      tables.play[sigma * nx + x] = g.Play(sigma, x);
      for (Index r = 0; r < R.size(); ++r) {
        tables.coutility[(sigma * nx + x) * R.size() + r] =
            S.IndexOf(g.Coutility(sigma, x, R.value(r)));
      }
    }
  }
  tables.equilibrium.assign(nx * *kcount * ns, 0);
  for (Index x = 0; x < nx; ++x) {
    for (std::size_t code = 0; code < *kcount; ++code) {
      const Continuation k = Continuation::Enumerated(R, ny, code);
      for (Index sigma = 0; sigma < ns; ++sigma) {
        tables.equilibrium[(x * *kcount + code) * ns + sigma] =
            g.Equilibrium(x, k, sigma) ? 1 : 0;
      }
    }
  }
  return tables;
}

}  // namespace opengames
