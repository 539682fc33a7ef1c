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

// File formats. Everything is addressed by label; schema violations throw
// kSchemaError naming the offending JSON path, syntax errors throw
// kParseError with line and column.
//
// Value carriers (R, S): [elem, ...] with elem a number (payload = the
// number), a string (payload = its position) or {"label": l, "value": [..]};
// or {"real": p} for all of R^p.
//
// Game:
//   {"dom": {"X": [..], "S": carrier}, "cod": {"Y": [..], "R": carrier},
//    "strategies": [..],
//    "play": {sigma: {x: y}}            ({sigma: y} when X has one element)
//    "coutility": "passthrough" | {sigma: {x: {r: s}}},
//    "equilibrium": "argmax" | "all" | "none"
//                   | {"table": [{"x": x, "k": {y: r}, "sigma": [..]}]}}
//   Table entries list the optimal strategies at (x, k); omitted (x, k)
//   pairs have none.
// Bimatrix: {"moves1": [..], "moves2": [..], "payoff": {"a,b": [p1, p2]}}
// Morphism: {"alpha_Y": {y: y'}, "alpha_Sigma": {sigma: sigma'}}
// Utility: {"kind": "discounted" | "finite_horizon" | "mean_payoff_approx",
//           "delta": d, "horizon": n, "stage_payoff": {y: [..] | number},
//           "offset": [..], "scale": s}
// Transducer: {"states": [..], "initial": q, "stage": {q: sigma},
//              "step": {q: {y: q'}}}
//   or {"builtin": "all_constant", "stage": sigma}
//   or {"builtin": "grim_trigger", "cooperate": sigma, "punish": sigma,
//       "triggers": [y..]}       (default: every move but the cooperative one)
//   or {"builtin": "tit_for_tat", "start": sigma, "echo": {y: sigma}}
//       (echo defaults to swapping the two players of a square bimatrix)
//   or {"builtin": "depth_table", "depth": d, "default": sigma,
//       "entries": [{"history": [y..], "stage": sigma}]}
// Coalgebra: {"stage": game | bimatrix, "game": game,
//             "now": {s: sigma}, "ltr": {s: {y: s'}}, "hd": {z: y},
//             "tl": {z: z'}}

#ifndef OPENGAMES_JSON_IO_HPP_
#define OPENGAMES_JSON_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "opengames/coalgebra.hpp"
#include "opengames/game_library.hpp"
#include "opengames/iteration.hpp"
#include "opengames/open_game.hpp"
#include "opengames/transducer.hpp"
#include "opengames/two_cells.hpp"
#include "opengames/utility.hpp"

namespace opengames {

using Json = nlohmann::ordered_json;

Json ParseJsonText(std::string_view text, std::string_view source);
Json LoadJsonFile(const std::string& path);

ValueSet ValueSetFromJson(const Json& j, const std::string& path = "");
Json ValueSetToJson(const ValueSet& v);
// Element of a finite carrier by its JSON form (number, label or object).
Index ElementFromJson(const ValueSet& v, const Json& j,
                      const std::string& path = "");
Json ElementToJson(const ValueSet& v, Index i);

OpenGame GameFromJson(const Json& j, std::size_t guard = kDefaultEnumerationGuard);
// Throws kEnumerationTooLarge when a non-builtin equilibrium cannot be
// tabulated within `guard`.
Json GameToJson(const OpenGame& g, std::size_t guard = kDefaultEnumerationGuard);

Bimatrix BimatrixFromJson(const Json& j);
Json BimatrixToJson(const Bimatrix& m);
bool LooksLikeBimatrix(const Json& j);

// A stage game for iteration: a bimatrix file or a coutility-free game.
struct LoadedStage {
  CoutilityFreeGame game;
  std::optional<Bimatrix> bimatrix;
};
LoadedStage StageFromJson(const Json& j);

// {y: r} for finite R, {y: [..] | number} for real R.
Continuation ContinuationFromJson(const Json& j, const Boundary& cod);
Json ContinuationToJson(const Continuation& k, const Boundary& cod);

GameMorphism MorphismFromJson(const Json& j, const OpenGame& g,
                              const OpenGame& g2);
Json MorphismToJson(const GameMorphism& alpha, const OpenGame& g,
                    const OpenGame& g2);

UtilityFunctional UtilityFromJson(const Json& j, const FinSet& moves);
Json UtilityToJson(const UtilityFunctional& k);

StrategyTransducer TransducerFromJson(const Json& j, const IteratedGame& g,
                                      const Bimatrix* bimatrix = nullptr);
Json TransducerToJson(const StrategyTransducer& t, const IteratedGame& g);

Json VerdictToJson(const Verdict& v, const IteratedGame& g);
Json PrefixToJson(const StreamPrefix& w, const FinSet& moves);
Json DepthTableToJson(const DepthTable& t, const IteratedGame& g);

struct LoadedCoalgebra {
  LoadedStage stage;
  FiniteCoalgebra coalgebra;
};
LoadedCoalgebra CoalgebraFromJson(const Json& j);

}  // namespace opengames

#endif  // OPENGAMES_JSON_IO_HPP_
