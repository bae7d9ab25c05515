// Copyright 2026 The ecss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecss/canonical.h"
#include "ecss/cover.h"
#include "ecss/error.h"
#include "ecss/generators.h"
#include "ecss/graph.h"
#include "ecss/graph_io.h"
#include "ecss/oracle.h"
#include "ecss/pipeline.h"
#include "ecss/rational.h"
#include "ecss/structured.h"
#include "json.hpp"

namespace ecss {
namespace {

struct RunConfig {
  std::string input;
  std::string edges;
  std::string epsilon = "1/24";
  std::uint64_t seed = 1;
  std::int64_t budget_nodes = 10'000'000;
  std::int64_t budget_secs = 60;
  std::string format = "text";
  std::string family = "ham-plus-chords";
  std::string n = "10";
  std::string density = "1/5";
  int count = 1;
  bool skip_structure_check = false;
};

SolverBudget Budget(const RunConfig& config) {
  SolverBudget budget;
  budget.node_limit = config.budget_nodes;
  budget.time_limit = std::chrono::seconds(config.budget_secs);
  budget.Validate();
  return budget;
}

Rational Epsilon(const RunConfig& config) {
  const Rational eps = ParseRational(config.epsilon);
  if (eps <= 0 || eps > Rational(1, 24)) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "epsilon must lie in (0, 1/24], got " + ToString(eps));
  }
  return eps;
}

Graph LoadGraph(const RunConfig& config) {
  return ParseGraph(ReadFile(config.input));
}

// Edges of the --edges file; foreign pairs are a precondition failure.
EdgeSet LoadEdges(const Graph& graph, const RunConfig& config) {
  std::pair<Vertex, Vertex> foreign;
  auto set = ToEdgeSet(graph, ParseEdgeList(ReadFile(config.edges)), &foreign);
  if (!set) {
    throw Error(ErrorCode::kPreconditionViolated,
                "edge " + std::to_string(foreign.first) + "-" +
                    std::to_string(foreign.second) + " is not in the graph");
  }
  return *std::move(set);
}

std::string Commented(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += "# " + line + "\n";
  return out;
}

// Exact optimum when the oracle can afford it.
void AttachOpt(const Graph& graph, PipelineReport& report) {
  if (graph.num_edges() <= kDefaultOracleLimit) {
    report.SetOpt(ExactMin2Ecss(graph).value);
  }
}

int CmdSolve(const RunConfig& config, std::ostream& out) {
  const Rational eps = Epsilon(config);
  const SolverBudget budget = Budget(config);
  const Graph graph = LoadGraph(config);
  auto [solution, report] = Solve(graph, eps, budget);
  AttachOpt(graph, report);
  if (config.format == "records") {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(report.ToRecord());
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (EdgeId e : solution.ids()) {
      edges.push_back({graph.edge(e).u, graph.edge(e).v});
    }
    j["edges"] = edges;
    out << j.dump() << "\n";
  } else {
    out << Commented(report.ToText()) << FormatEdgeList(solution);
  }
  return report.optimal ? kExitOk : kExitBudget;
}

int CmdVerify(const RunConfig& config, std::ostream& out) {
  const Graph graph = LoadGraph(config);
  const VerifyResult result =
      VerifySolution(graph, ParseEdgeList(ReadFile(config.edges)));
  if (result.valid) {
    out << "valid\n";
    return kExitOk;
  }
  out << "invalid: " << result.message << "\n";
  return kExitFailure;
}

int CmdCanonicalize(const RunConfig& config, std::ostream& out) {
  const Graph graph = LoadGraph(config);
  const Cover cover(LoadEdges(graph, config));
  auto [result, trace] = SemiCanonicalize(
      graph, cover, {.check_structure = !config.skip_structure_check});
  const ViolationReport check = CheckSemiCanonical(graph, result.edges());
  out << Commented(trace.ToText(graph));
  out << "# steps: " << trace.steps.size() << "\n";
  out << "# size: " << cover.size() << " -> " << result.size() << "\n";
  out << "# semi_canonical: " << (check.semi_canonical() ? "true" : "false")
      << "\n";
  out << FormatEdgeList(result.edges());
  return kExitOk;
}

int CmdGen(const RunConfig& config, std::ostream& out) {
  const int n = std::stoi(config.n);
  const Rational density = ParseRational(config.density);
  Graph graph = [&] {
    if (config.family == "cycle") return CycleGraph(n);
    if (config.family == "random-2vc") {
      return RandomTwoVertexConnected(n, density, config.seed);
    }
    return HamPlusChords(n, density, config.seed);
  }();
  out << FormatGraph(graph);
  return kExitOk;
}

int CmdStructure(const RunConfig& config, std::ostream& out) {
  const Graph graph = LoadGraph(config);
  const StructureReport report = BuildStructureReport(graph, Epsilon(config));
  out << report.ToText(graph);
  return report.PassesDecidableChecks() ? kExitOk : kExitFailure;
}

std::pair<int, int> SizeRange(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int CmdBench(const RunConfig& config, std::ostream& out) {
  const Rational eps = Epsilon(config);
  const SolverBudget budget = Budget(config);
  const Rational density = ParseRational(config.density);
  const auto [lo, hi] = SizeRange(config.n);
  const bool records = config.format == "records";

  int instances = 0;
  int failures = 0;
  int non_optimal = 0;
  int with_opt = 0;
  Rational ratio_sum = 0;
  std::optional<Rational> max_ratio;
  for (int n = lo; n <= hi; ++n) {
    for (int i = 0; i < config.count; ++i) {
      const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
      ++instances;
      nlohmann::ordered_json j;
      j["family"] = config.family;
      j["n"] = n;
      j["seed"] = seed;
      std::string text = "family=" + config.family + " n=" +
                         std::to_string(n) + " seed=" + std::to_string(seed);
      try {
        const Graph graph =
            config.family == "cycle"        ? CycleGraph(n)
            : config.family == "random-2vc" ? RandomTwoVertexConnected(n, density, seed)
                                            : HamPlusChords(n, density, seed);
        j["m"] = graph.num_edges();
        text += " m=" + std::to_string(graph.num_edges());
        auto [solution, report] = Solve(graph, eps, budget);
        AttachOpt(graph, report);
        if (!report.optimal) ++non_optimal;
        if (report.ratio) {
          ++with_opt;
          ratio_sum += *report.ratio;
          if (!max_ratio || *report.ratio > *max_ratio) max_ratio = report.ratio;
        }
        const auto fields = nlohmann::ordered_json::parse(report.ToRecord());
        for (const auto& [key, value] : fields.items()) j[key] = value;
        text += " cover_size=" + std::to_string(report.cover_size) +
                " canonical_size=" + std::to_string(report.canonical_size) +
                " solution_size=" + std::to_string(report.solution_size) +
                " bound=" + ToString(report.bound) +
                " optimal=" + (report.optimal ? "true" : "false") + " opt=" +
                (report.opt ? std::to_string(*report.opt) : "unknown") +
                " ratio=" + (report.ratio ? ToString(*report.ratio) : "unknown");
      } catch (const Error& e) {
        ++failures;
        j["error"] = e.what();
        text += std::string(" error=\"") + e.what() + "\"";
      }
      out << (records ? j.dump() : text) << "\n";
    }
  }
  const std::string mean =
      with_opt > 0 ? ToString(ratio_sum / with_opt) : "unknown";
  const std::string max = max_ratio ? ToString(*max_ratio) : "unknown";
  if (records) {
    nlohmann::ordered_json s;
    s["summary"] = true;
    s["instances"] = instances;
    s["failures"] = failures;
    s["non_optimal"] = non_optimal;
    s["with_opt"] = with_opt;
    s["mean_ratio"] = mean;
    s["max_ratio"] = max;
    out << s.dump() << "\n";
  } else {
    out << "summary instances=" << instances << " failures=" << failures
        << " non_optimal=" << non_optimal << " with_opt=" << with_opt
        << " mean_ratio=" << mean << " max_ratio=" << max << "\n";
  }
  if (failures > 0) return kExitFailure;
  return non_optimal > 0 ? kExitBudget : kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kVertexOutOfRange:
    case ErrorCode::kSelfLoop:
    case ErrorCode::kParallelEdge:
    case ErrorCode::kEpsilonOutOfRange:
      return kExitParse;
    case ErrorCode::kInfeasible:
      return kExitInfeasible;
    default:
      return kExitFailure;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Triangle-free 2-edge-covers and 2-edge-connected spanning "
               "subgraphs"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", config.input, "Graph file")->required();
  };
  auto add_epsilon = [&](CLI::App* cmd) {
    cmd->add_option("--epsilon", config.epsilon, "Structure parameter in (0, 1/24]")
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", config.budget_nodes,
                    "Branch-and-bound node limit")
        ->capture_default_str();
    cmd->add_option("--budget-secs", config.budget_secs, "Solver time limit")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
  };
  auto add_generator = [&](CLI::App* cmd) {
    cmd->add_option("--family", config.family, "Instance family")
        ->check(CLI::IsMember({"cycle", "random-2vc", "ham-plus-chords"}))
        ->capture_default_str();
    cmd->add_option("--density", config.density, "Edge probability")
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "Compute a 2-edge-connected spanning subgraph");
  add_input(solve);
  add_epsilon(solve);
  add_budget(solve);
  add_format(solve);
  solve->add_option("--seed", config.seed, "Accepted for uniformity; solve is deterministic");

  CLI::App* verify = app.add_subcommand("verify", "Check a candidate solution");
  add_input(verify);
  verify->add_option("--edges", config.edges, "Solution edge list")->required();

  CLI::App* canonicalize = app.add_subcommand(
      "canonicalize", "Rewrite a triangle-free 2-edge-cover to semi-canonical form");
  add_input(canonicalize);
  canonicalize->add_option("--edges", config.edges, "Cover edge list")->required();
  canonicalize->add_flag("--skip-structure-check", config.skip_structure_check,
                         "Do not require the decidable structure checks");

  CLI::App* gen = app.add_subcommand("gen", "Generate a graph");
  add_generator(gen);
  gen->add_option("--n", config.n, "Number of vertices")->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "Solve a family sweep");
  add_generator(bench);
  add_epsilon(bench);
  add_budget(bench);
  add_format(bench);
  bench->add_option("--n", config.n, "N or A..B")->capture_default_str();
  bench->add_option("--count", config.count, "Seeds per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* structure = app.add_subcommand("structure", "Report structure checks");
  add_input(structure);
  add_epsilon(structure);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (solve->parsed()) return CmdSolve(config, out);
    if (verify->parsed()) return CmdVerify(config, out);
    if (canonicalize->parsed()) return CmdCanonicalize(config, out);
    if (gen->parsed()) return CmdGen(config, out);
    if (bench->parsed()) return CmdBench(config, out);
    if (structure->parsed()) return CmdStructure(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitFailure;
}

}  // namespace ecss
