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

#include "opengames/json_io.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "opengames/error.hpp"

namespace opengames {
namespace {

[[noreturn]] void Schema(const std::string& path, const std::string& message) {
  Fail(ErrorKind::kSchemaError, (path.empty() ? "/" : path) + ": " + message);
}

std::string Sub(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string NumberLabel(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

const Json& Field(const Json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) Schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Schema(path, "missing field \"" + std::string(key) + "\"");
  return *it;
}

const Json* OptionalField(const Json& j, std::string_view key,
                          const std::string& path) {
  if (!j.is_object()) Schema(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double Number(const Json& j, const std::string& path) {
  if (!j.is_number()) Schema(path, "expected a number");
  return j.get<double>();
}

std::size_t Count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    Schema(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

// Labels may be written as strings or numbers.
std::string Label(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return NumberLabel(j.get<double>());
  Schema(path, "expected a label");
}

FinSet Labels(const Json& j, const std::string& path) {
  if (!j.is_array()) Schema(path, "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    labels.push_back(Label(j[i], Sub(path, std::to_string(i))));
  }
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size()) Schema(path, "duplicate labels");
  return FinSet(std::move(labels));
}

Index LabelIn(const FinSet& set, const std::string& label,
              const std::string& path, ErrorKind kind = ErrorKind::kUnknownLabel) {
  auto i = set.Find(label);
  if (!i) Fail(kind, (path.empty() ? "/" : path) + ": unknown label \"" + label + "\"");
  return *i;
}

Index LabelIn(const FinSet& set, const Json& j, const std::string& path,
              ErrorKind kind = ErrorKind::kUnknownLabel) {
  return LabelIn(set, Label(j, path), path, kind);
}

// Object keyed by every label of `domain`, each mapped through `read`.
template <typename Read>
void ForEachKey(const Json& j, const FinSet& domain, const std::string& path,
                Read read) {
  if (!j.is_object()) Schema(path, "expected an object keyed by labels");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!domain.Find(it.key())) {
      Fail(ErrorKind::kUnknownLabel,
           Sub(path, it.key()) + ": unknown label \"" + it.key() + "\"");
    }
  }
  for (Index i = 0; i < domain.size(); ++i) {
    auto it = j.find(domain.label(i));
    if (it == j.end()) {
      Schema(path, "missing entry for \"" + domain.label(i) + "\"");
    }
    read(i, *it, Sub(path, domain.label(i)));
  }
}

Value Vector(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array()) Schema(path, "expected a number or an array of numbers");
  Value v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(Number(j[i], Sub(path, std::to_string(i))));
  }
  return v;
}

Json LabelArray(const FinSet& s) { return Json(s.labels()); }

}  // namespace

Json ParseJsonText(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    Fail(ErrorKind::kParseError, std::string(source) + ":" +
                                     std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + e.what());
  }
}

Json LoadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kParseError, path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJsonText(buffer.str(), path);
}

ValueSet ValueSetFromJson(const Json& j, const std::string& path) {
  if (j.is_object()) {
    return ValueSet::Real(Count(Field(j, "real", path), Sub(path, "real")));
  }
  if (!j.is_array()) Schema(path, "expected a carrier array or {\"real\": p}");
  std::vector<std::string> labels;
  std::vector<Value> payloads;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = Sub(path, std::to_string(i));
    const Json& e = j[i];
    if (e.is_number()) {
      labels.push_back(NumberLabel(e.get<double>()));
      payloads.push_back({e.get<double>()});
    } else if (e.is_string()) {
      labels.push_back(e.get<std::string>());
      payloads.push_back({static_cast<double>(i)});
    } else if (e.is_object()) {
      labels.push_back(Label(Field(e, "label", at), Sub(at, "label")));
      payloads.push_back(Vector(Field(e, "value", at), Sub(at, "value")));
    } else {
      Schema(at, "expected a number, a label or {\"label\", \"value\"}");
    }
  }
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size()) Schema(path, "duplicate labels");
  for (const Value& p : payloads) {
    if (p.size() != payloads.front().size()) {
      Schema(path, "carrier values differ in dimension");
    }
  }
  std::set<Value> distinct(payloads.begin(), payloads.end());
  if (distinct.size() != payloads.size()) {
    Schema(path, "two carrier elements share a value");
  }
  return ValueSet::Finite(FinSet(std::move(labels)), std::move(payloads),
                          payloads.empty() ? std::optional<std::size_t>(1)
                                           : std::nullopt);
}

Json ElementToJson(const ValueSet& v, Index i) {
  const std::string& label = v.labels().label(i);
  auto p = v.value(i);
  if (p.size() == 1 && label == NumberLabel(p[0])) return p[0];
  if (p.size() == 1 && p[0] == static_cast<double>(i)) return label;
  return Json{{"label", label}, {"value", Value(p.begin(), p.end())}};
}

Json ValueSetToJson(const ValueSet& v) {
  if (!v.is_finite()) return Json{{"real", v.dim()}};
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(ElementToJson(v, i));
  return out;
}

Index ElementFromJson(const ValueSet& v, const Json& j, const std::string& path) {
  if (!v.is_finite()) Schema(path, "real carriers have no named elements");
  if (j.is_object()) {
    return LabelIn(v.labels(), Field(j, "label", path), Sub(path, "label"),
                   ErrorKind::kValueOutsideCarrier);
  }
  return LabelIn(v.labels(), j, path, ErrorKind::kValueOutsideCarrier);
}

OpenGame GameFromJson(const Json& j, std::size_t guard) {
  const Json& dom = Field(j, "dom", "");
  const Json& cod = Field(j, "cod", "");
  FinSet xs = Labels(Field(dom, "X", "/dom"), "/dom/X");
  ValueSet ss = ValueSetFromJson(Field(dom, "S", "/dom"), "/dom/S");
  FinSet ys = Labels(Field(cod, "Y", "/cod"), "/cod/Y");
  ValueSet rs = ValueSetFromJson(Field(cod, "R", "/cod"), "/cod/R");
  FinSet strategies = Labels(Field(j, "strategies", ""), "/strategies");
  const std::size_t nx = xs.size();
  const std::size_t ns = strategies.size();
  const std::size_t ny = ys.size();

  std::vector<Index> play(ns * nx);
  ForEachKey(Field(j, "play", ""), strategies, "/play",
             [&](Index sigma, const Json& e, const std::string& at) {
               if (nx == 1 && !e.is_object()) {
                 play[sigma] = LabelIn(ys, e, at);
                 return;
               }
               ForEachKey(e, xs, at,
                          [&](Index x, const Json& y, const std::string& at2) {
                            play[sigma * nx + x] = LabelIn(ys, y, at2);
                          });
             });

  const Json& cj = Field(j, "coutility", "");
  CoutilityFn coutility;
  bool passthrough = false;
  if (cj.is_string()) {
    if (cj.get<std::string>() != "passthrough") {
      Schema("/coutility", "expected \"passthrough\" or a table");
    }
    if (ss != rs) Schema("/coutility", "pass-through coutility needs S = R");
    passthrough = true;
    coutility = PassthroughCoutility();
  } else {
    if (!ss.is_finite() || !rs.is_finite()) {
      Schema("/coutility", "coutility tables need finite S and R");
    }
    const std::size_t nr = rs.size();
    auto table = std::make_shared<std::vector<Index>>(ns * nx * nr);
    ForEachKey(cj, strategies, "/coutility",
               [&](Index sigma, const Json& e, const std::string& at) {
                 ForEachKey(e, xs, at, [&](Index x, const Json& e2,
                                           const std::string& at2) {
                   ForEachKey(e2, rs.labels(), at2, [&](Index r, const Json& s,
                                                        const std::string& at3) {
                     (*table)[(sigma * nx + x) * nr + r] =
                         ElementFromJson(ss, s, at3);
                   });
                 });
               });
    coutility = [table, ss, rs, nx, nr](Index sigma, Index x,
                                        std::span<const double> r) {
      const Index si = (*table)[(sigma * nx + x) * nr + rs.IndexOf(r)];
      auto v = ss.value(si);
      return Value(v.begin(), v.end());
    };
  }

  const Json& ej = Field(j, "equilibrium", "");
  EquilibriumFn equilibrium;
  DeviationFn deviation;
  GameTraits traits;
  traits.passthrough_coutility = passthrough;
  if (ej.is_string()) {
    const std::string name = ej.get<std::string>();
    if (name == "argmax") {
      if (rs.dim() != 1) Schema("/equilibrium", "argmax needs scalar utilities");
      equilibrium = ArgmaxEquilibrium(play, nx, ns);
      deviation = ArgmaxDeviation(play, nx, ns);
    } else if (name == "all" || name == "none") {
      const bool all = name == "all";
      equilibrium = [all](Index, const Continuation&, Index, double) {
        return all;
      };
    } else {
      Schema("/equilibrium", "unknown builtin equilibrium \"" + name + "\"");
    }
    traits.builtin = name;
    traits.affine_invariant = true;
  } else {
    const Json& entries = Field(ej, "table", "/equilibrium");
    if (!entries.is_array()) Schema("/equilibrium/table", "expected an array");
    if (!rs.is_finite()) {
      Schema("/equilibrium", "equilibrium tables need a finite R");
    }
    auto kcount = ContinuationCount(rs, ny, guard);
    if (!kcount || nx * ns > guard / std::max<std::size_t>(*kcount, 1)) {
      Fail(ErrorKind::kEnumerationTooLarge,
           "/equilibrium: table over X x (Y -> R) x Sigma exceeds the guard");
    }
    const std::size_t kc = *kcount;
    auto table = std::make_shared<std::vector<char>>(nx * kc * ns, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string at = "/equilibrium/table/" + std::to_string(i);
      const Json& e = entries[i];
      const Index x = LabelIn(xs, Field(e, "x", at), at + "/x");
      std::vector<Index> rows(ny);
      ForEachKey(Field(e, "k", at), ys, at + "/k",
                 [&](Index y, const Json& r, const std::string& at2) {
                   rows[y] = ElementFromJson(rs, r, at2);
                 });
      std::size_t code = 0;
      for (Index y = 0; y < ny; ++y) code = code * rs.size() + rows[y];
      const Json& members = Field(e, "sigma", at);
      if (!members.is_array()) Schema(at + "/sigma", "expected an array");
      for (std::size_t m = 0; m < members.size(); ++m) {
        const Index sigma = LabelIn(strategies, members[m],
                                    at + "/sigma/" + std::to_string(m));
        (*table)[(x * kc + code) * ns + sigma] = 1;
      }
    }
    equilibrium = [table, rs, kc, ns](Index x, const Continuation& k,
                                      Index sigma, double) {
      return (*table)[(x * kc + ContinuationCode(rs, k)) * ns + sigma] != 0;
    };
  }
  return OpenGame(Boundary{std::move(xs), std::move(ss)},
                  Boundary{std::move(ys), std::move(rs)},
                  std::move(strategies), std::move(play),
                  std::move(coutility), std::move(equilibrium),
                  std::move(traits), std::move(deviation));
}

Json GameToJson(const OpenGame& g, std::size_t guard) {
  const FinSet& xs = g.dom().points;
  const FinSet& ys = g.cod().points;
  const ValueSet& ss = g.dom().values;
  const ValueSet& rs = g.cod().values;
  const FinSet& strategies = g.strategies();
  Json out;
  out["dom"] = Json{{"X", LabelArray(xs)}, {"S", ValueSetToJson(ss)}};
  out["cod"] = Json{{"Y", LabelArray(ys)}, {"R", ValueSetToJson(rs)}};
  out["strategies"] = LabelArray(strategies);
  Json play = Json::object();
  for (Index s = 0; s < strategies.size(); ++s) {
    Json row = Json::object();
    for (Index x = 0; x < xs.size(); ++x) {
      row[xs.label(x)] = ys.label(g.Play(s, x));
    }
    play[strategies.label(s)] = std::move(row);
  }
  out["play"] = std::move(play);

  if (g.traits().passthrough_coutility) {
    out["coutility"] = "passthrough";
  } else {
    if (!ss.is_finite() || !rs.is_finite()) {
      Fail(ErrorKind::kEnumerationTooLarge,
           "coutility over real carriers cannot be written as a table");
    }
    Json table = Json::object();
    for (Index s = 0; s < strategies.size(); ++s) {
      Json by_x = Json::object();
      for (Index x = 0; x < xs.size(); ++x) {
        Json by_r = Json::object();
        for (Index r = 0; r < rs.size(); ++r) {
          by_r[rs.labels().label(r)] =
              ElementToJson(ss, ss.IndexOf(g.Coutility(s, x, rs.value(r))));
        }
        by_x[xs.label(x)] = std::move(by_r);
      }
      table[strategies.label(s)] = std::move(by_x);
    }
    out["coutility"] = std::move(table);
  }

  const std::string& builtin = g.traits().builtin;
  if (builtin == "argmax" || builtin == "all" || builtin == "none") {
    out["equilibrium"] = builtin;
    return out;
  }
  if (!rs.is_finite()) {
    Fail(ErrorKind::kEnumerationTooLarge,
         "equilibria over real utilities cannot be written as a table");
  }
  auto kcount = ContinuationCount(rs, ys.size(), guard);
  if (!kcount ||
      xs.size() * strategies.size() > guard / std::max<std::size_t>(*kcount, 1)) {
    Fail(ErrorKind::kEnumerationTooLarge,
         "equilibrium table exceeds the guard of " + std::to_string(guard));
  }
  Json entries = Json::array();
  for (Index x = 0; x < xs.size(); ++x) {
    for (std::size_t code = 0; code < *kcount; ++code) {
      const Continuation k = Continuation::Enumerated(rs, ys.size(), code);
      std::vector<Index> members = EquilibriumSet(g, x, k);
      if (members.empty()) continue;
      Json sigma = Json::array();
      for (Index s : members) sigma.push_back(strategies.label(s));
      entries.push_back(Json{{"x", xs.label(x)},
                             {"k", ContinuationToJson(k, g.cod())},
                             {"sigma", std::move(sigma)}});
    }
  }
  out["equilibrium"] = Json{{"table", std::move(entries)}};
  return out;
}

bool LooksLikeBimatrix(const Json& j) {
  return j.is_object() && j.contains("moves1");
}

Bimatrix BimatrixFromJson(const Json& j) {
  Bimatrix m;
  m.moves1 = Labels(Field(j, "moves1", ""), "/moves1");
  m.moves2 = Labels(Field(j, "moves2", ""), "/moves2");
  if (m.moves1.empty() || m.moves2.empty()) {
    Fail(ErrorKind::kEmptyMoveSet, "/: bimatrix players need moves");
  }
  const Json& payoff = Field(j, "payoff", "");
  FinSet profiles = Product(m.moves1, m.moves2);
  m.payoff.resize(profiles.size());
  ForEachKey(payoff, profiles, "/payoff",
             [&](Index p, const Json& e, const std::string& at) {
               Value v = Vector(e, at);
               if (v.size() != 2) Schema(at, "expected a pair of payoffs");
               m.payoff[p] = {v[0], v[1]};
             });
  return m;
}

Json BimatrixToJson(const Bimatrix& m) {
  Json payoff = Json::object();
  FinSet profiles = Product(m.moves1, m.moves2);
  for (Index p = 0; p < profiles.size(); ++p) {
    payoff[profiles.label(p)] = Json::array({m.payoff[p][0], m.payoff[p][1]});
  }
  return Json{{"moves1", LabelArray(m.moves1)},
              {"moves2", LabelArray(m.moves2)},
              {"payoff", std::move(payoff)}};
}

LoadedStage StageFromJson(const Json& j) {
  if (LooksLikeBimatrix(j)) {
    Bimatrix m = BimatrixFromJson(j);
    return LoadedStage{BimatrixGame(m), std::move(m)};
  }
  return LoadedStage{CoutilityFreeGame(GameFromJson(j)), std::nullopt};
}

Continuation ContinuationFromJson(const Json& j, const Boundary& cod) {
  const ValueSet& rs = cod.values;
  std::vector<Value> rows(cod.points.size());
  ForEachKey(j, cod.points, "", [&](Index y, const Json& e,
                                    const std::string& at) {
    if (rs.is_finite()) {
      auto v = rs.value(ElementFromJson(rs, e, at));
      rows[y].assign(v.begin(), v.end());
    } else {
      rows[y] = Vector(e, at);
      if (rows[y].size() != rs.dim()) Schema(at, "value has the wrong dimension");
    }
  });
  return Continuation::FromRows(rows, rs.dim());
}

Json ContinuationToJson(const Continuation& k, const Boundary& cod) {
  Json out = Json::object();
  for (Index y = 0; y < k.size(); ++y) {
    std::optional<Index> e;
    if (cod.values.is_finite()) e = cod.values.Find(k[y]);
    out[cod.points.label(y)] =
        e ? ElementToJson(cod.values, *e) : Json(Value(k[y].begin(), k[y].end()));
  }
  return out;
}

GameMorphism MorphismFromJson(const Json& j, const OpenGame& g,
                              const OpenGame& g2) {
  GameMorphism alpha;
  alpha.alpha_y.resize(g.cod().points.size());
  alpha.alpha_sigma.resize(g.strategies().size());
  ForEachKey(Field(j, "alpha_Y", ""), g.cod().points, "/alpha_Y",
             [&](Index y, const Json& e, const std::string& at) {
               alpha.alpha_y[y] = LabelIn(g2.cod().points, e, at);
             });
  ForEachKey(Field(j, "alpha_Sigma", ""), g.strategies(), "/alpha_Sigma",
             [&](Index s, const Json& e, const std::string& at) {
               alpha.alpha_sigma[s] = LabelIn(g2.strategies(), e, at);
             });
  return alpha;
}

Json MorphismToJson(const GameMorphism& alpha, const OpenGame& g,
                    const OpenGame& g2) {
  Json ay = Json::object();
  for (Index y = 0; y < alpha.alpha_y.size(); ++y) {
    ay[g.cod().points.label(y)] = g2.cod().points.label(alpha.alpha_y[y]);
  }
  Json as = Json::object();
  for (Index s = 0; s < alpha.alpha_sigma.size(); ++s) {
    as[g.strategies().label(s)] = g2.strategies().label(alpha.alpha_sigma[s]);
  }
  return Json{{"alpha_Y", std::move(ay)}, {"alpha_Sigma", std::move(as)}};
}

UtilityFunctional UtilityFromJson(const Json& j, const FinSet& moves) {
  std::string kind = "discounted";
  if (const Json* kj = OptionalField(j, "kind", "")) {
    if (!kj->is_string()) Schema("/kind", "expected a string");
    kind = kj->get<std::string>();
  }
  std::vector<Value> payoff(moves.size());
  ForEachKey(Field(j, "stage_payoff", ""), moves, "/stage_payoff",
             [&](Index y, const Json& e, const std::string& at) {
               payoff[y] = Vector(e, at);
             });
  Value offset;
  if (const Json* oj = OptionalField(j, "offset", "")) offset = Vector(*oj, "/offset");
  double scale = 1.0;
  if (const Json* sj = OptionalField(j, "scale", "")) scale = Number(*sj, "/scale");
  if (kind == "discounted") {
    return UtilityFunctional::Discounted(
        moves, std::move(payoff), Number(Field(j, "delta", ""), "/delta"),
        std::move(offset), scale);
  }
  if (kind == "finite_horizon") {
    return UtilityFunctional::FiniteHorizon(
        moves, std::move(payoff), Count(Field(j, "horizon", ""), "/horizon"),
        std::move(offset), scale);
  }
  if (kind == "mean_payoff_approx") {
    return UtilityFunctional::MeanPayoffApprox(
        moves, std::move(payoff), Count(Field(j, "horizon", ""), "/horizon"));
  }
  Schema("/kind", "unknown utility kind \"" + kind + "\"");
}

Json UtilityToJson(const UtilityFunctional& k) {
  Json out;
  Json payoff = Json::object();
  for (Index y = 0; y < k.moves().size(); ++y) {
    auto u = k.payoff(y);
    payoff[k.moves().label(y)] = Value(u.begin(), u.end());
  }
  switch (k.kind()) {
    case UtilityKind::kDiscounted:
      out["kind"] = "discounted";
      out["delta"] = k.delta();
      break;
    case UtilityKind::kFiniteHorizon:
      out["kind"] = "finite_horizon";
      out["horizon"] = k.horizon();
      break;
    case UtilityKind::kMeanPayoffApprox:
      out["kind"] = "mean_payoff_approx";
      out["horizon"] = k.horizon();
      break;
  }
  out["stage_payoff"] = std::move(payoff);
  out["offset"] = k.offset();
  out["scale"] = k.scale();
  return out;
}

StrategyTransducer TransducerFromJson(const Json& j, const IteratedGame& g,
                                      const Bimatrix* bimatrix) {
  const FinSet& moves = g.moves();
  const FinSet& strategies = g.stage().strategies();
  const std::size_t ns = strategies.size();
  const std::size_t ny = moves.size();
  auto stage_ref = [&](const Json& e, const std::string& at) {
    return LabelIn(strategies, e, at, ErrorKind::kUnknownMove);
  };
  if (const Json* bj = OptionalField(j, "builtin", "")) {
    const std::string name = Label(*bj, "/builtin");
    if (name == "all_constant") {
      return AllConstant(moves, ns, stage_ref(Field(j, "stage", ""), "/stage"));
    }
    if (name == "grim_trigger") {
      const Index cooperate =
          stage_ref(Field(j, "cooperate", ""), "/cooperate");
      const Index punish = stage_ref(Field(j, "punish", ""), "/punish");
      std::vector<Index> triggers;
      if (const Json* tj = OptionalField(j, "triggers", "")) {
        if (!tj->is_array()) Schema("/triggers", "expected an array of moves");
        for (std::size_t i = 0; i < tj->size(); ++i) {
          triggers.push_back(LabelIn(moves, (*tj)[i],
                                     "/triggers/" + std::to_string(i),
                                     ErrorKind::kUnknownMove));
        }
      } else {
        const Index cooperative = g.stage().Play(cooperate);
        for (Index y = 0; y < ny; ++y) {
          if (y != cooperative) triggers.push_back(y);
        }
      }
      return GrimTrigger(moves, ns, cooperate, punish, triggers);
    }
    if (name == "tit_for_tat") {
      const Index start = stage_ref(Field(j, "start", ""), "/start");
      std::vector<Index> echo(ny);
      if (const Json* ej = OptionalField(j, "echo", "")) {
        ForEachKey(*ej, moves, "/echo",
                   [&](Index y, const Json& e, const std::string& at) {
                     echo[y] = stage_ref(e, at);
                   });
      } else if (bimatrix) {
        echo = SwappedProfileEcho(*bimatrix);
      } else {
        Schema("/echo", "echo is required unless the stage is a bimatrix");
      }
      return TitForTat(moves, ns, start, echo);
    }
    if (name == "depth_table") {
      const std::size_t depth = Count(Field(j, "depth", ""), "/depth");
      const Index fallback = stage_ref(Field(j, "default", ""), "/default");
      auto count = HistoryCount(ny, depth, kDefaultEnumerationGuard);
      if (!count) {
        Fail(ErrorKind::kEnumerationTooLarge, "/depth: table too large");
      }
      std::vector<Index> table(*count, fallback);
      if (const Json* ej = OptionalField(j, "entries", "")) {
        if (!ej->is_array()) Schema("/entries", "expected an array");
        for (std::size_t i = 0; i < ej->size(); ++i) {
          const std::string at = "/entries/" + std::to_string(i);
          const Json& hj = Field((*ej)[i], "history", at);
          if (!hj.is_array()) Schema(at + "/history", "expected an array");
          StreamPrefix history;
          for (std::size_t m = 0; m < hj.size(); ++m) {
            history.push_back(LabelIn(moves, hj[m],
                                      at + "/history/" + std::to_string(m),
                                      ErrorKind::kUnknownMove));
          }
          if (history.size() >= depth) {
            Schema(at + "/history", "history is not shorter than the depth");
          }
          table[HistoryIndex(history, ny)] =
              stage_ref(Field((*ej)[i], "stage", at), at + "/stage");
        }
      }
      return DepthTableStrategy(DepthTable(ny, depth, std::move(table), fallback),
                                moves);
    }
    Schema("/builtin", "unknown builtin strategy \"" + name + "\"");
  }

  FinSet states = Labels(Field(j, "states", ""), "/states");
  if (states.empty()) Schema("/states", "a transducer needs a state");
  const Index initial = LabelIn(states, Field(j, "initial", ""), "/initial");
  std::vector<Index> stage(states.size());
  ForEachKey(Field(j, "stage", ""), states, "/stage",
             [&](Index q, const Json& e, const std::string& at) {
               stage[q] = LabelIn(strategies, e, at);
             });
  std::vector<Index> step(states.size() * ny);
  ForEachKey(Field(j, "step", ""), states, "/step",
             [&](Index q, const Json& e, const std::string& at) {
               ForEachKey(e, moves, at, [&](Index y, const Json& e2,
                                            const std::string& at2) {
                 step[q * ny + y] = LabelIn(states, e2, at2);
               });
             });
  return StrategyTransducer(std::move(states), initial, std::move(stage),
                            std::move(step), ny);
}

Json TransducerToJson(const StrategyTransducer& t, const IteratedGame& g) {
  const FinSet& moves = g.moves();
  Json stage = Json::object();
  Json step = Json::object();
  for (Index q = 0; q < t.num_states(); ++q) {
    stage[t.states().label(q)] = g.stage().strategies().label(t.stage(q));
    Json row = Json::object();
    for (Index y = 0; y < moves.size(); ++y) {
      row[moves.label(y)] = t.states().label(t.step(q, y));
    }
    step[t.states().label(q)] = std::move(row);
  }
  return Json{{"states", LabelArray(t.states())},
              {"initial", t.states().label(t.initial())},
              {"stage", std::move(stage)},
              {"step", std::move(step)}};
}

Json PrefixToJson(const StreamPrefix& w, const FinSet& moves) {
  Json out = Json::array();
  for (Index y : w) out.push_back(moves.label(y));
  return out;
}

Json VerdictToJson(const Verdict& v, const IteratedGame& g) {
  Json out;
  out["status"] = std::string(VerdictStatusName(v.status));
  if (v.witness) {
    Json deviation = nullptr;
    if (v.witness->deviation) {
      deviation = g.stage().strategies().label(*v.witness->deviation);
    }
    out["witness"] = Json{{"history", PrefixToJson(v.witness->history, g.moves())},
                          {"deviation", std::move(deviation)}};
  } else {
    out["witness"] = nullptr;
  }
  out["depth_checked"] =
      v.depth_checked ? Json(*v.depth_checked) : Json("unbounded");
  out["tolerance"] = v.tolerance;
  out["marginal"] = v.marginal;
  out["approximate"] = v.approximate;
  out["warnings"] = v.warnings;
  out["nodes_checked"] = v.nodes_checked;
  return out;
}

Json DepthTableToJson(const DepthTable& t, const IteratedGame& g) {
  const FinSet& strategies = g.stage().strategies();
  Json entries = Json::array();
  StreamPrefix history;
  std::size_t index = 0;
  std::size_t width = 1;
  for (std::size_t length = 0; length < t.depth(); ++length) {
    for (std::size_t code = 0; code < width; ++code, ++index) {
      history.assign(length, 0);
      std::size_t c = code;
      for (std::size_t i = length; i-- > 0;) {
        history[i] = c % t.num_moves();
        c /= t.num_moves();
      }
      entries.push_back(Json{{"history", PrefixToJson(history, g.moves())},
                             {"stage", strategies.label(t.table()[index])}});
    }
    width *= t.num_moves();
  }
  return Json{{"builtin", "depth_table"},
              {"depth", t.depth()},
              {"default", strategies.label(t.fallback())},
              {"entries", std::move(entries)}};
}

LoadedCoalgebra CoalgebraFromJson(const Json& j) {
  LoadedStage stage = StageFromJson(Field(j, "stage", ""));
  CoutilityFreeGame h(GameFromJson(Field(j, "game", "")));
  const FinSet& ys = stage.game.moves();
  const FinSet& sg = stage.game.strategies();
  const FinSet& sh = h.strategies();
  const FinSet& zs = h.moves();
  FiniteCoalgebra c{h, std::vector<Index>(sh.size()),
                    std::vector<Index>(sh.size() * ys.size()),
                    std::vector<Index>(zs.size()),
                    std::vector<Index>(zs.size())};
  ForEachKey(Field(j, "now", ""), sh, "/now",
             [&](Index s, const Json& e, const std::string& at) {
               c.now[s] = LabelIn(sg, e, at);
             });
  ForEachKey(Field(j, "ltr", ""), sh, "/ltr",
             [&](Index s, const Json& e, const std::string& at) {
               ForEachKey(e, ys, at, [&](Index y, const Json& e2,
                                         const std::string& at2) {
                 c.ltr[s * ys.size() + y] = LabelIn(sh, e2, at2);
               });
             });
  ForEachKey(Field(j, "hd", ""), zs, "/hd",
             [&](Index z, const Json& e, const std::string& at) {
               c.hd[z] = LabelIn(ys, e, at);
             });
  ForEachKey(Field(j, "tl", ""), zs, "/tl",
             [&](Index z, const Json& e, const std::string& at) {
               c.tl[z] = LabelIn(zs, e, at);
             });
  return LoadedCoalgebra{std::move(stage), std::move(c)};
}

}  // namespace opengames
