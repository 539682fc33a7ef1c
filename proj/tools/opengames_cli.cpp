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

// opengames: run one analysis per invocation and emit a JSON report plus a
// plain-text summary. Exit codes: 0 the analysis ran (whatever its verdict),
// 1 input error, 2 internal error.

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opengames/coalgebra.hpp"
#include "opengames/conditioning.hpp"
#include "opengames/error.hpp"
#include "opengames/game_library.hpp"
#include "opengames/iteration.hpp"
#include "opengames/json_io.hpp"
#include "opengames/parallel.hpp"
#include "opengames/two_cells.hpp"

namespace og = opengames;
using og::Json;

namespace {

struct Request {
  std::string command;
  std::vector<std::string> inputs;
  std::string continuation;
  std::string utility;
  std::string index;
  std::size_t depth = 12;
  double delta = 0.0;
  bool delta_set = false;
  double epsilon = og::kDefaultTolerance;
  std::string mode = "exact";
  std::size_t samples = 1000;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string output;
};

// A finished analysis: the machine-readable result and its summary.
struct Outcome {
  Json result;
  std::string summary;
};

Json LabelList(const std::vector<og::Index>& xs, const og::FinSet& labels) {
  Json out = Json::array();
  for (og::Index x : xs) out.push_back(labels.label(x));
  return out;
}

std::string JoinLabels(const Json& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += "; ";
    out += "(" + labels[i].get<std::string>() + ")";
  }
  return out + "}";
}

void Require(bool ok, const std::string& message) {
  if (!ok) og::Fail(og::ErrorKind::kInvalidArgument, message);
}

void ExpectInputs(const Request& r, std::size_t n, const char* usage) {
  if (r.inputs.size() != n) {
    og::Fail(og::ErrorKind::kInvalidArgument,
             r.command + " expects " + usage);
  }
}

Outcome CheckNash(const Request& r) {
  ExpectInputs(r, 1, "one game or bimatrix file");
  const Json j = og::LoadJsonFile(r.inputs[0]);
  og::OpenGame g = og::UnitGame();
  std::optional<og::Continuation> k;
  if (og::LooksLikeBimatrix(j)) {
    const og::Bimatrix m = og::BimatrixFromJson(j);
    g = og::BimatrixGame(m).game();
    if (r.continuation.empty()) k = og::BimatrixContinuation(m);
  } else {
    g = og::GameFromJson(j);
  }
  if (!r.continuation.empty()) {
    k = og::ContinuationFromJson(og::LoadJsonFile(r.continuation), g.cod());
  }
  if (!k) {
    og::Fail(og::ErrorKind::kInvalidArgument,
             "check-nash on a game file needs --continuation");
  }
  Outcome out;
  Json by_state = Json::object();
  std::ostringstream summary;
  for (og::Index x = 0; x < g.dom().points.size(); ++x) {
    Json eq = LabelList(og::EquilibriumSet(g, x, *k, r.epsilon), g.strategies());
    summary << "equilibria";
    if (g.dom().points.size() > 1) summary << " at " << g.dom().points.label(x);
    summary << ": " << JoinLabels(eq) << "\n";
    by_state[g.dom().points.label(x)] = std::move(eq);
  }
  if (g.dom().points.size() == 1) {
    out.result["equilibria"] = by_state.begin().value();
  } else {
    out.result["equilibria"] = std::move(by_state);
  }
  out.result["continuation"] = og::ContinuationToJson(*k, g.cod());
  out.summary = summary.str();
  return out;
}

og::OpenGame LoadGame(const std::string& path) {
  const Json j = og::LoadJsonFile(path);
  if (og::LooksLikeBimatrix(j)) return og::BimatrixGame(og::BimatrixFromJson(j)).game();
  return og::GameFromJson(j);
}

Outcome GameSummary(const og::OpenGame& g) {
  Outcome out;
  out.result["game"] = og::GameToJson(g);
  std::ostringstream summary;
  summary << "game (" << g.dom().points.size() << " states, "
          << g.strategies().size() << " strategies, " << g.cod().points.size()
          << " moves)\n";
  out.summary = summary.str();
  return out;
}

Outcome ComposeCommand(const Request& r) {
  ExpectInputs(r, 2, "two game files");
  return GameSummary(og::Compose(LoadGame(r.inputs[0]), LoadGame(r.inputs[1])));
}

Outcome TensorCommand(const Request& r) {
  ExpectInputs(r, 2, "two game files");
  return GameSummary(og::Tensor(LoadGame(r.inputs[0]), LoadGame(r.inputs[1])));
}

Outcome ConditionCommand(const Request& r) {
  ExpectInputs(r, 1, "one game file");
  Require(!r.index.empty(), "condition needs --index");
  std::vector<std::string> labels;
  std::stringstream in(r.index);
  for (std::string item; std::getline(in, item, ';');) labels.push_back(item);
  return GameSummary(og::Condition(og::FinSet(labels), LoadGame(r.inputs[0])));
}

std::vector<og::Continuation> RandomContinuations(const og::Boundary& cod,
                                                  std::size_t count,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<og::Continuation> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<og::Value> rows(cod.points.size(), og::Value(cod.values.dim()));
    for (auto& row : rows) {
      for (double& v : row) v = u(rng);
    }
    out.push_back(og::Continuation::FromRows(rows, cod.values.dim()));
  }
  return out;
}

Outcome CheckMorphismCommand(const Request& r) {
  ExpectInputs(r, 3, "a morphism file and two game files");
  const og::OpenGame g = LoadGame(r.inputs[1]);
  const og::OpenGame g2 = LoadGame(r.inputs[2]);
  const og::GameMorphism alpha =
      og::MorphismFromJson(og::LoadJsonFile(r.inputs[0]), g, g2);
  og::MorphismCheckOptions options;
  options.tolerance = r.epsilon;
  if (!g2.cod().values.is_finite()) {
    options.sample = RandomContinuations(g2.cod(), r.samples, r.seed);
  }
  const og::MorphismCheck check = og::CheckMorphism(alpha, g, g2, options);
  Outcome out;
  out.result["passed"] = check.passed;
  out.result["sampled"] = check.sampled;
  out.result["continuations_checked"] = check.continuations_checked;
  if (check.counterexample) {
    const auto& c = *check.counterexample;
    Json cx;
    cx["condition"] =
        c.condition == og::MorphismCondition::kPlay ? "play" : "equilibrium";
    cx["sigma"] = g.strategies().label(c.sigma);
    cx["state"] = g.dom().points.label(c.state);
    if (c.k) {
      cx["k"] = og::ContinuationToJson(*c.k, g2.cod());
      cx["k_index"] = c.k_index;
    }
    out.summary = "morphism fails the " + cx["condition"].get<std::string>() +
                  " condition at strategy " + g.strategies().label(c.sigma) +
                  "\n";
    out.result["counterexample"] = std::move(cx);
  } else {
    out.result["counterexample"] = nullptr;
    out.summary = std::string("morphism holds") +
                  (check.sampled ? " on the sampled continuations" : "") +
                  " (" + std::to_string(check.continuations_checked) +
                  " continuations)\n";
  }
  return out;
}

std::string VerdictSummary(const og::Verdict& v, const og::IteratedGame& g) {
  std::ostringstream s;
  s << og::VerdictStatusName(v.status);
  if (v.depth_checked) {
    s << " to depth " << *v.depth_checked;
  } else {
    s << " (exact)";
  }
  if (v.witness) {
    s << ", witness history [";
    for (std::size_t i = 0; i < v.witness->history.size(); ++i) {
      s << (i ? " " : "") << g.moves().label(v.witness->history[i]);
    }
    s << "]";
    if (v.witness->deviation) {
      s << ", better stage strategy "
        << g.stage().strategies().label(*v.witness->deviation);
    }
  }
  s << "\n";
  for (const auto& w : v.warnings) s << "warning: " << w << "\n";
  return s.str();
}

Outcome IterateCheck(const Request& r) {
  ExpectInputs(r, 2, "a stage file and a strategy file");
  const og::LoadedStage stage = og::StageFromJson(og::LoadJsonFile(r.inputs[0]));
  const og::IteratedGame g(stage.game);
  const og::StrategyTransducer t = og::TransducerFromJson(
      og::LoadJsonFile(r.inputs[1]), g,
      stage.bimatrix ? &*stage.bimatrix : nullptr);
  Require(r.utility.empty() != !r.delta_set,
          "iterate-check needs exactly one of --utility and --delta");
  std::optional<og::UtilityFunctional> k;
  if (r.delta_set) {
    Require(stage.bimatrix.has_value(),
            "--delta builds the utility from bimatrix payoffs; pass "
            "--utility for other stage games");
    k = og::UtilityFunctional::Discounted(
        g.moves(), og::BimatrixPayoffs(*stage.bimatrix), r.delta);
  } else {
    k = og::UtilityFromJson(og::LoadJsonFile(r.utility), g.moves());
  }
  og::Verdict v;
  if (r.mode == "exact") {
    v = g.GfpMembershipExact(t, *k, r.epsilon);
  } else {
    og::PhiOptions options;
    options.tolerance = r.epsilon;
    v = g.PhiCheck(t, *k, r.depth, options);
  }
  Outcome out;
  out.result["verdict"] = og::VerdictToJson(v, g);
  out.result["play"] = og::PrefixToJson(g.PlayStream(t, 8), g.moves());
  out.summary = VerdictSummary(v, g);
  return out;
}

og::LoadedCoalgebra LoadCoalgebra(const std::string& path,
                                  std::optional<og::IteratedGame>& g) {
  og::LoadedCoalgebra c = og::CoalgebraFromJson(og::LoadJsonFile(path));
  g.emplace(c.stage.game);
  og::ValidateShape(*g, c.coalgebra);
  return c;
}

Outcome Unfold(const Request& r) {
  ExpectInputs(r, 1, "one coalgebra file");
  std::optional<og::IteratedGame> g;
  const og::LoadedCoalgebra lc = LoadCoalgebra(r.inputs[0], g);
  const og::FiniteCoalgebra& c = lc.coalgebra;
  const og::Unfolding u = og::UnfoldCoalgebra(*g, c, r.depth);
  Json strategies = Json::object();
  for (og::Index s = 0; s < u.sigma.size(); ++s) {
    strategies[c.h.strategies().label(s)] = og::DepthTableToJson(u.sigma[s], *g);
  }
  Json streams = Json::object();
  for (og::Index z = 0; z < u.y.size(); ++z) {
    streams[c.h.moves().label(z)] = og::PrefixToJson(u.y[z], g->moves());
  }
  Outcome out;
  out.result["depth"] = r.depth;
  out.result["strategies"] = std::move(strategies);
  out.result["streams"] = std::move(streams);
  out.summary = "unfolded " + std::to_string(u.sigma.size()) +
                " strategies and " + std::to_string(u.y.size()) +
                " streams to depth " + std::to_string(r.depth) + "\n";
  return out;
}

Json Mismatch(std::optional<std::size_t> at) {
  return at ? Json(*at) : Json(nullptr);
}

Outcome Bisim(const Request& r) {
  Outcome out;
  if (r.inputs.size() == 1) {
    // Play preservation for every strategy of the coalgebra.
    std::optional<og::IteratedGame> g;
    const og::LoadedCoalgebra lc = LoadCoalgebra(r.inputs[0], g);
    const og::FiniteCoalgebra& c = lc.coalgebra;
    Json rows = Json::object();
    std::size_t agree = 0;
    for (og::Index s = 0; s < c.h.strategies().size(); ++s) {
      const auto at = og::BisimCheck(
          og::LassoGenerator(og::UnfoldedStream(c, c.h.Play(s))),
          og::PlayGenerator(*g, og::UnfoldedStrategy(*g, c, s)), r.depth);
      agree += !at;
      rows[c.h.strategies().label(s)] = Json{{"first_difference", Mismatch(at)}};
    }
    out.result["depth"] = r.depth;
    out.result["strategies"] = std::move(rows);
    out.result["all_equal"] = agree == c.h.strategies().size();
    out.summary = std::to_string(agree) + " of " +
                  std::to_string(c.h.strategies().size()) +
                  " strategies play their unfolded stream to depth " +
                  std::to_string(r.depth) + "\n";
    return out;
  }
  ExpectInputs(r, 3, "a coalgebra file, or a stage file and two strategy files");
  const og::LoadedStage stage = og::StageFromJson(og::LoadJsonFile(r.inputs[0]));
  const og::IteratedGame g(stage.game);
  const og::Bimatrix* m = stage.bimatrix ? &*stage.bimatrix : nullptr;
  const og::StrategyTransducer a =
      og::TransducerFromJson(og::LoadJsonFile(r.inputs[1]), g, m);
  const og::StrategyTransducer b =
      og::TransducerFromJson(og::LoadJsonFile(r.inputs[2]), g, m);
  g.Validate(a);
  g.Validate(b);
  const auto at = og::BisimCheck(og::PlayGenerator(g, a), og::PlayGenerator(g, b),
                                 r.depth);
  const bool same = og::SameStrategy(a, b, r.depth);
  out.result["depth"] = r.depth;
  out.result["plays_first_difference"] = Mismatch(at);
  out.result["same_strategy"] = same;
  out.summary = std::string(at ? "plays differ at move " + std::to_string(*at)
                               : "plays agree") +
                "; strategies " + (same ? "agree to depth " : "differ within depth ") +
                std::to_string(r.depth) + "\n";
  return out;
}

Outcome Dispatch(const Request& r) {
  Require(r.epsilon > 0.0 && std::isfinite(r.epsilon), "--epsilon must be > 0");
  Require(!r.delta_set || (r.delta >= 0.0 && r.delta < 1.0),
          "--delta must lie in [0, 1)");
  Require(r.threads >= 1, "--threads must be >= 1");
  og::SetNumThreads(r.threads);
  if (r.command == "check-nash") return CheckNash(r);
  if (r.command == "compose") return ComposeCommand(r);
  if (r.command == "tensor") return TensorCommand(r);
  if (r.command == "condition") return ConditionCommand(r);
  if (r.command == "check-morphism") return CheckMorphismCommand(r);
  if (r.command == "iterate-check") return IterateCheck(r);
  if (r.command == "unfold") return Unfold(r);
  if (r.command == "bisim") return Bisim(r);
  og::Fail(og::ErrorKind::kInvalidArgument, "unknown command " + r.command);
}

Json Parameters(const Request& r) {
  Json p;
  p["depth"] = r.depth;
  p["delta"] = r.delta_set ? Json(r.delta) : Json(nullptr);
  p["epsilon"] = r.epsilon;
  p["mode"] = r.mode;
  p["seed"] = r.seed;
  p["threads"] = r.threads;
  return p;
}

std::string UtcNow() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int Emit(const Request& r, Json report, const std::string& summary) {
  const std::string text = report.dump(2) + "\n";
  if (r.output.empty()) {
    std::cout << text;
    std::cerr << summary;
  } else {
    std::ofstream out(r.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << r.output << "\n";
      return 1;
    }
    out << text;
    std::cout << summary;
  }
  return 0;
}

void AddCommon(CLI::App* sub, Request& r) {
  sub->add_option("inputs", r.inputs, "Input files")->required();
  sub->add_option("--threads", r.threads, "Worker threads")->capture_default_str();
  sub->add_option("--seed", r.seed, "Seed for sampled checks")->capture_default_str();
  sub->add_option("--output", r.output, "Write the JSON report here");
  sub->add_option("--epsilon", r.epsilon, "Comparison tolerance")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open games: composition, 2-cells and iterated-game analyses"};
  app.require_subcommand(1);
  Request r;

  auto* nash = app.add_subcommand("check-nash", "Equilibria of a game at a continuation");
  AddCommon(nash, r);
  nash->add_option("--continuation", r.continuation, "Continuation file {y: r}");

  AddCommon(app.add_subcommand("compose", "Sequential composition of two games"), r);
  AddCommon(app.add_subcommand("tensor", "Parallel composition of two games"), r);

  auto* cond = app.add_subcommand("condition", "Condition a game on an index set");
  AddCommon(cond, r);
  cond->add_option("--index", r.index, "Index labels separated by ';'")->required();

  auto* morph = app.add_subcommand("check-morphism", "Check a morphism between games");
  AddCommon(morph, r);
  morph->add_option("--samples", r.samples, "Random continuations for real utilities")
      ->capture_default_str();

  auto* iter = app.add_subcommand("iterate-check", "Equilibrium check in the iterated game");
  AddCommon(iter, r);
  auto* utility = iter->add_option("--utility", r.utility, "Utility functional file");
  auto* delta = iter->add_option("--delta", r.delta, "Discount factor for a bimatrix stage");
  utility->excludes(delta);
  iter->add_option("--mode", r.mode, "exact or bounded")
      ->check(CLI::IsMember({"exact", "bounded"}))
      ->capture_default_str();
  iter->add_option("--depth", r.depth, "History depth for the bounded check")
      ->capture_default_str();

  auto* unfold = app.add_subcommand("unfold", "Unfold a finite coalgebra");
  AddCommon(unfold, r);
  unfold->add_option("--depth", r.depth, "Unfolding depth")->capture_default_str();

  auto* bisim = app.add_subcommand("bisim", "Compare streams to a depth");
  AddCommon(bisim, r);
  bisim->add_option("--depth", r.depth, "Comparison depth")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  r.command = app.get_subcommands().front()->get_name();
  r.delta_set = delta->count() > 0;

  const auto started = std::chrono::steady_clock::now();
  Json report;
  report["command"] = r.command;
  report["inputs"] = r.inputs;
  report["parameters"] = Parameters(r);
  int code = 0;
  std::string summary;
  try {
    Outcome outcome = Dispatch(r);
    report["result"] = std::move(outcome.result);
    report["error"] = nullptr;
    summary = std::move(outcome.summary);
  } catch (const og::Error& e) {
    report["result"] = nullptr;
    report["error"] = Json{{"kind", std::string(og::ErrorKindName(e.kind()))},
                           {"message", e.what()}};
    summary = "error: " + std::string(e.what()) + "\n";
    code = 1;
  } catch (const nlohmann::json::exception& e) {
    report["result"] = nullptr;
    report["error"] = Json{{"kind", "SchemaError"}, {"message", e.what()}};
    summary = "error: " + std::string(e.what()) + "\n";
    code = 1;
  } catch (const std::exception& e) {
    report["result"] = nullptr;
    report["error"] = Json{{"kind", "InternalError"}, {"message", e.what()}};
    summary = "internal error: " + std::string(e.what()) + "\n";
    code = 2;
  }
  const double elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  report["timestamp"] = Json{{"utc", UtcNow()}, {"elapsed_ms", elapsed}};
  const int emitted = Emit(r, std::move(report), summary);
  return code != 0 ? code : emitted;
}
