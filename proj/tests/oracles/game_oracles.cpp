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

#include "oracles/game_oracles.hpp"

namespace opengames::oracle {

std::size_t Power(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  while (exponent--) out *= base;
  return out;
}

Digits DigitsOf(std::size_t code, std::size_t length, std::size_t base) {
  Digits d(length);
  for (std::size_t i = length; i-- > 0;) {
    d[i] = code % base;
    code /= base;
  }
  return d;
}

RawGame MakeRaw(const OpenGame& g, GameTables t) {
  return RawGame{g.dom().points.size(), g.strategies().size(),
                 g.cod().points.size(), g.cod().values.size(),
                 g.dom().values.size(), std::move(t)};
}

std::size_t RawGame::Play(std::size_t sigma, std::size_t x) const {
  return t.play[sigma * nx + x];
}

std::size_t RawGame::Coutility(std::size_t sigma, std::size_t x,
                               std::size_t r) const {
  return t.coutility[(sigma * nx + x) * nr + r];
}

bool RawGame::Eq(std::size_t x, const Digits& k, std::size_t sigma) const {
  std::size_t code = 0;
  for (std::size_t d : k) code = code * nr + d;
  return t.equilibrium[(x * Power(nr, ny) + code) * ns + sigma] != 0;
}

std::size_t ComposePlay(const RawGame& g, const RawGame& h, std::size_t i,
                        std::size_t j, std::size_t x) {
  return h.Play(j, g.Play(i, x));
}

std::size_t ComposeCoutility(const RawGame& g, const RawGame& h, std::size_t i,
                             std::size_t j, std::size_t x, std::size_t q) {
  const std::size_t y = g.Play(i, x);
  return g.Coutility(i, x, h.Coutility(j, y, q));
}

bool ComposeEquilibrium(const RawGame& g, const RawGame& h, std::size_t i,
                        std::size_t j, std::size_t x, const Digits& k) {
  Digits inner(g.ny);
  for (std::size_t y = 0; y < g.ny; ++y) {
    inner[y] = h.Coutility(j, y, k[h.Play(j, y)]);
  }
  if (!g.Eq(x, inner, i)) return false;
  for (std::size_t other = 0; other < g.ns; ++other) {
    if (!h.Eq(g.Play(other, x), k, j)) return false;
  }
  return true;
}

bool TensorEquilibrium(const RawGame& g, const RawGame& h, std::size_t i,
                       std::size_t j, std::size_t x1, std::size_t x2,
                       const Digits& k) {
  const std::size_t y1_played = g.Play(i, x1);
  const std::size_t y2_played = h.Play(j, x2);
  Digits k1(g.ny);
  for (std::size_t y1 = 0; y1 < g.ny; ++y1) {
    k1[y1] = k[y1 * h.ny + y2_played] / h.nr;
  }
  Digits k2(h.ny);
  for (std::size_t y2 = 0; y2 < h.ny; ++y2) {
    k2[y2] = k[y1_played * h.ny + y2] % h.nr;
  }
  return g.Eq(x1, k1, i) && h.Eq(x2, k2, j);
}

bool ConditionEquilibrium(const RawGame& h, std::size_t na, const Digits& f,
                          std::size_t x, const Digits& k) {
  for (std::size_t a = 0; a < na; ++a) {
    Digits row(k.begin() + a * h.ny, k.begin() + (a + 1) * h.ny);
    if (!h.Eq(x, row, f[a])) return false;
  }
  return true;
}

bool FgEquilibrium(const RawGame& g, const RawGame& h, std::size_t sigma,
                   const Digits& f, const Digits& k) {
  Digits outer(g.ny);
  for (std::size_t y = 0; y < g.ny; ++y) {
    outer[y] = k[y * h.ny + h.Play(f[y], 0)];
  }
  if (!g.Eq(0, outer, sigma)) return false;
  // The conditioned game's equilibrium does not depend on its state, so the
  // quantifier over the first game's strategies reduces to one check.
  for (std::size_t y = 0; y < g.ny; ++y) {
    Digits row(k.begin() + y * h.ny, k.begin() + (y + 1) * h.ny);
    if (!h.Eq(0, row, f[y])) return false;
  }
  return true;
}

std::optional<MorphismViolation> FirstMorphismViolation(
    const std::vector<std::size_t>& alpha_y,
    const std::vector<std::size_t>& alpha_sigma, const OpenGame& g,
    const OpenGame& g2) {
  const std::size_t nx = g.dom().points.size();
  const std::size_t ns = g.strategies().size();
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t x = 0; x < nx; ++x) {
      if (alpha_y[g.Play(s, x)] != g2.Play(alpha_sigma[s], x)) {
        return MorphismViolation{true, s, x, 0};
      }
    }
  }
  const ValueSet& r = g.cod().values;
  const std::size_t ny2 = g2.cod().points.size();
  const std::size_t nk = Power(r.size(), ny2);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t code = 0; code < nk; ++code) {
        const Digits digits = DigitsOf(code, ny2, r.size());
        std::vector<Index> pulled(alpha_y.size());
        for (std::size_t y = 0; y < alpha_y.size(); ++y) pulled[y] = digits[alpha_y[y]];
        const Continuation k = Continuation::FromElements(r, digits);
        const Continuation kp = Continuation::FromElements(r, pulled);
        if (g.Equilibrium(x, kp, s) && !g2.Equilibrium(x, k, alpha_sigma[s])) {
          return MorphismViolation{false, s, x, code};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> PureNash(
    std::size_t n1, std::size_t n2,
    const std::vector<std::pair<double, double>>& payoff) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      bool stable = true;
      for (std::size_t a2 = 0; a2 < n1; ++a2) {
        if (payoff[a2 * n2 + b].first > payoff[a * n2 + b].first) stable = false;
      }
      for (std::size_t b2 = 0; b2 < n2; ++b2) {
        if (payoff[a * n2 + b2].second > payoff[a * n2 + b].second) stable = false;
      }
      if (stable) out.push_back(a * n2 + b);
    }
  }
  return out;
}

}  // namespace opengames::oracle
