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

#include "opengames/conditioning.hpp"

#include "opengames/error.hpp"
#include "opengames/two_cells.hpp"

namespace opengames {

ConditionedStrategy DecodeConditioned(Index sigma, std::size_t index_size,
                                      std::size_t inner_strategies) {
  return {DecodeTable(sigma, index_size, inner_strategies)};
}

Index EncodeConditioned(const ConditionedStrategy& f,
                        std::size_t inner_strategies) {
  return EncodeTable(f.table, inner_strategies);
}

OpenGame Condition(const FinSet& index_set, const OpenGame& h,
                   std::size_t guard) {
  if (index_set.empty()) {
    Fail(ErrorKind::kEmptyIndexSet, "cannot condition on an empty set");
  }
  const std::size_t na = index_set.size();
  const std::size_t nx = h.dom().points.size();
  const std::size_t ny = h.cod().points.size();
  const std::size_t nh = h.strategies().size();
  FinSet strategies = FunctionSpace(index_set, h.strategies(), guard);
  const std::size_t nf = strategies.size();

  // play((a, x), f) = (a, P_H(f(a), x))
  std::vector<Index> play(nf * na * nx);
  for (Index f = 0; f < nf; ++f) {
    auto table = DecodeTable(f, na, nh);
    for (Index a = 0; a < na; ++a) {
      for (Index x = 0; x < nx; ++x) {
        play[f * (na * nx) + a * nx + x] = a * ny + h.Play(table[a], x);
      }
    }
  }

  auto coutility = [h, na, nx, nh](Index f, Index ax,
                                   std::span<const double> r) {
    const Index a = ax / nx;
    const Index component = DecodeTable(f, na, nh)[a];
    return h.Coutility(component, ax % nx, r);
  };

  auto equilibrium = [h, na, nx, ny, nh](Index ax, const Continuation& k,
                                         Index f, double tol) {
    const Index x = ax % nx;
    auto table = DecodeTable(f, na, nh);
    const std::size_t dim = k.dim();
    for (Index a = 0; a < na; ++a) {
      Continuation slice(ny, dim);
      for (Index y = 0; y < ny; ++y) slice.Set(y, k[a * ny + y]);
      if (!h.Equilibrium(x, slice, table[a], tol)) return false;
    }
    return true;
  };

  GameTraits traits;
  traits.passthrough_coutility = h.traits().passthrough_coutility;
  traits.affine_invariant = h.traits().affine_invariant;
  return OpenGame(Boundary{Product(index_set, h.dom().points), h.dom().values},
                  Boundary{Product(index_set, h.cod().points), h.cod().values},
                  std::move(strategies), std::move(play),
                  std::move(coutility), std::move(equilibrium),
                  std::move(traits));
}

GameMorphism ConditionOnMorphism(const FinSet& index_set,
                                 const GameMorphism& alpha, const OpenGame& h,
                                 const OpenGame& h2,
                                 const MorphismCheckOptions& options) {
  if (index_set.empty()) {
    Fail(ErrorKind::kEmptyIndexSet, "cannot condition on an empty set");
  }
  auto check = CheckMorphism(alpha, h, h2, options);
  if (!check.passed) {
    Fail(ErrorKind::kInvalidMorphism,
         "input pair is not a morphism between the given games");
  }
  const std::size_t na = index_set.size();
  const std::size_t ny = h.cod().points.size();
  const std::size_t ny2 = h2.cod().points.size();
  const std::size_t nh = h.strategies().size();
  const std::size_t nh2 = h2.strategies().size();
  auto count = CheckedPower(nh, na, options.guard);
  if (!count || !CheckedPower(nh2, na, options.guard)) {
    Fail(ErrorKind::kEnumerationTooLarge, "strategy tables exceed the guard");
  }

  GameMorphism out;
  out.alpha_y.resize(na * ny);
  for (Index a = 0; a < na; ++a) {
    for (Index y = 0; y < ny; ++y) {
      out.alpha_y[a * ny + y] = a * ny2 + alpha.alpha_y[y];
    }
  }
  out.alpha_sigma.resize(*count);
  for (Index f = 0; f < *count; ++f) {
    auto table = DecodeTable(f, na, nh);
    for (auto& s : table) s = alpha.alpha_sigma[s];
    out.alpha_sigma[f] = EncodeTable(table, nh2);
  }
  return out;
}

}  // namespace opengames
