// Copyright 2026 The Authors.
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

// gmfa_cli: generate data, mine maximal frequent sets, solve, count, bench.
//
// Exit codes: 0 success, 2 invalid input, 3 a run hit its time limit and the
// output is partial.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmfa/bench.h"
#include "gmfa/dataset.h"
#include "gmfa/fbc.h"
#include "gmfa/gain.h"
#include "gmfa/solver.h"
#include "gmfa/synthetic.h"
#include "json.hpp"

namespace gmfa {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitTimeout = 3;

struct GlobalFlags {
  std::string dataset;
  std::string costs;
  std::uint64_t seed = 1;
  double timeout_s = 60;
  bool json = false;
  bool csv = false;
};

struct GenFlags {
  int n = 1000;
  int m = 10;
  std::string density = "correlated";
  std::string cost_spec = "brackets";
};

struct MineFlags {
  double tau = 0.1;
  std::string out;
};

struct GainFlags {
  std::string mined;
  double tau = 0.1;
  std::string gain = "fbc";
  std::string feedback;
  std::string workload;
  bool no_smoothing = false;
  std::string method = "patterns";
  bool verify = false;
};

struct SolveFlags {
  std::optional<int> row;
  std::string attrs;
  std::string budget = "0";
  std::string solver = "ggmfa";
  bool low_budget_start = false;
};

struct FbcFlags {
  std::string node;
  std::string bits;
};

struct BenchFlags {
  std::string sweep = "m";
  std::vector<double> values;
  std::int64_t n = 200000;
  int m = 15;
  std::string budget = "2000";
  double tau = 0.1;
  std::vector<std::string> algorithms = {"bgmfa", "igmfa", "ggmfa"};
  int reps = 1;
  std::string density = "correlated";
  std::string cost_spec = "brackets";
  std::string out;
  bool low_budget_start = false;
};

void RequireDataPaths(const GlobalFlags& g) {
  if (g.dataset.empty() || g.costs.empty()) {
    throw ValidationError("--dataset and --costs are required");
  }
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  if (!out) throw ValidationError("failed writing " + path);
}

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> SplitNames(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto b = name.find_first_not_of(" \t");
    const auto e = name.find_last_not_of(" \t");
    if (b != std::string::npos) names.push_back(name.substr(b, e - b + 1));
  }
  return names;
}

// The mined file when given, otherwise a fresh mining run at --tau.
MaximalFrequentSet MaximalSetsFor(const Dataset& dataset, const GainFlags& f) {
  if (!f.mined.empty()) return ReadMaximalFrequents(ReadFile(f.mined));
  return MineMaximalFrequents(dataset, FbcConfig(f.tau));
}

std::unique_ptr<GainFunction> MakeGain(const Dataset& dataset, const GainFlags& f) {
  if (f.gain == "fbc") {
    return std::make_unique<FbcGain>(MaximalSetsFor(dataset, f), dataset,
                                     ParseFbcMethod(f.method), f.verify);
  }
  if (f.gain == "feedback") {
    if (f.feedback.empty()) throw ValidationError("--feedback is required");
    return std::make_unique<FeedbackGain>(
        dataset, ParseFeedback(ReadFile(f.feedback), dataset.num_rows()));
  }
  if (f.gain == "workload") {
    if (f.workload.empty()) throw ValidationError("--workload is required");
    return std::make_unique<WorkloadGain>(
        ParseWorkload(ReadFile(f.workload), dataset.catalog()), !f.no_smoothing);
  }
  throw ValidationError("--gain must be fbc, feedback or workload");
}

void AddGainOptions(CLI::App* cmd, GainFlags& f) {
  cmd->add_option("--mined", f.mined, "Maximal frequent set file from 'mine'");
  cmd->add_option("--tau", f.tau, "Frequency threshold when mining on the fly");
  cmd->add_option("--gain", f.gain, "fbc, feedback or workload");
  cmd->add_option("--feedback", f.feedback, "row_index,score CSV");
  cmd->add_option("--workload", f.workload, "One query per line");
  cmd->add_flag("--no-smoothing", f.no_smoothing, "Raw workload gain");
  cmd->add_option("--method", f.method, "patterns, apriori or bruteforce");
  cmd->add_flag("--verify", f.verify, "Cross-check FBC against brute force");
}

int RunGen(const GlobalFlags& g, const GenFlags& f) {
  RequireDataPaths(g);
  SyntheticSpec spec;
  spec.n = f.n;
  spec.m = f.m;
  spec.density = ParseDensitySpec(f.density);
  spec.costs = ParseCostSpec(f.cost_spec);
  spec.seed = g.seed;
  const Dataset dataset = GenerateSynthetic(spec);
  WriteText(g.dataset, DatasetToCsv(dataset));
  WriteText(g.costs, CostsToCsv(dataset.catalog()));
  if (g.json) {
    std::cout << nlohmann::json{{"n", f.n}, {"m", f.m}, {"seed", g.seed}}.dump()
              << "\n";
  }
  return kExitOk;
}

int RunMine(const GlobalFlags& g, const MineFlags& f) {
  RequireDataPaths(g);
  const Dataset dataset = LoadDataset(g.dataset, g.costs);
  const auto start = Clock::now();
  const MaximalFrequentSet mined = MineMaximalFrequents(dataset, FbcConfig(f.tau));
  const double ms = MillisSince(start);
  const std::string text = WriteMaximalFrequents(mined);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    WriteText(f.out, text);
  }
  if (g.json) {
    std::cerr << nlohmann::json{{"maximal_sets", mined.items.size()},
                                {"mining_ms", ms}}
                     .dump()
              << "\n";
  } else {
    std::cerr << "mined " << mined.items.size() << " maximal frequent sets in " << ms
              << " ms\n";
  }
  return kExitOk;
}

int RunSolve(const GlobalFlags& g, const GainFlags& gf, const SolveFlags& f) {
  RequireDataPaths(g);
  const Dataset dataset = LoadDataset(g.dataset, g.costs);
  const auto gain = MakeGain(dataset, gf);
  SolveRequest request;
  if (f.row && !f.attrs.empty()) {
    throw ValidationError("give either --row or --attrs, not both");
  }
  if (f.row) {
    if (*f.row < 0 || *f.row >= dataset.num_rows()) {
      throw ValidationError("--row out of range");
    }
    request.tuple_attrs = dataset.row(*f.row);
  } else {
    request.tuple_attrs = dataset.catalog().SetOf(SplitNames(f.attrs));
  }
  request.budget = ParseMoney(f.budget);
  request.gain = gain.get();
  request.options.low_budget_start = f.low_budget_start;
  request.options.deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(g.timeout_s));
  const SolveResult result = Solve(ParseSolverKind(f.solver), request, dataset);
  if (g.csv) {
    std::string chosen;
    for (const auto& name : dataset.catalog().NamesOf(result.chosen)) {
      if (!chosen.empty()) chosen += ';';
      chosen += name;
    }
    const nlohmann::json j = ToJson(result, dataset.catalog());
    std::cout << "chosen,gain,nodes_generated,gain_evals,elapsed_ms\n"
              << chosen << "," << j["gain"].dump() << ","
              << result.stats.nodes_generated << "," << result.stats.gain_evals << ","
              << result.stats.elapsed_ms << "\n";
  } else {
    std::cout << ToJson(result, dataset.catalog()).dump(2) << "\n";
  }
  return result.stats.timed_out ? kExitTimeout : kExitOk;
}

int RunFbc(const GlobalFlags& g, const GainFlags& gf, const FbcFlags& f) {
  RequireDataPaths(g);
  const Dataset dataset = LoadDataset(g.dataset, g.costs);
  AttrSet node;
  if (!f.bits.empty()) {
    if (!f.node.empty()) throw ValidationError("give either --node or --bits");
    node = Bitset::FromString(f.bits);
    if (static_cast<int>(node.size()) != dataset.num_attributes()) {
      throw ValidationError("--bits has the wrong width");
    }
  } else {
    node = dataset.catalog().SetOf(SplitNames(f.node));
  }
  const MaximalFrequentSet mined = MaximalSetsFor(dataset, gf);
  const FbcGain gain(mined, dataset, ParseFbcMethod(gf.method), gf.verify);
  const auto start = Clock::now();
  const Count count = gain.EvaluateCount(node, dataset);
  const double ms = MillisSince(start);
  if (g.csv) {
    std::cout << "node,fbc,elapsed_ms\n" << node.ToString() << "," << count.str()
              << "," << ms << "\n";
  } else {
    nlohmann::json out;
    out["node"] = node.ToString();
    out["attributes"] = dataset.catalog().NamesOf(node);
    out["fbc"] = nlohmann::json::parse(count.str());
    out["elapsed_ms"] = ms;
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int RunBenchCommand(const GlobalFlags& g, const BenchFlags& f) {
  BenchPlan plan;
  plan.var = ParseSweepVar(f.sweep);
  plan.values = f.values;
  plan.n = f.n;
  plan.m = f.m;
  plan.budget = ParseMoney(f.budget);
  plan.tau = f.tau;
  plan.algorithms = f.algorithms;
  plan.reps = f.reps;
  plan.timeout_s = g.timeout_s;
  plan.seed = g.seed;
  plan.density = ParseDensitySpec(f.density);
  plan.costs = ParseCostSpec(f.cost_spec);
  plan.low_budget_start = f.low_budget_start;
  ValidatePlan(plan);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) throw ValidationError("cannot write " + f.out);
    out = &file;
  }
  nlohmann::json rows = nlohmann::json::array();
  if (!g.json) *out << BenchCsvHeader() << "\n" << std::flush;
  bool any_timeout = false;
  RunBench(plan, [&](const BenchRow& row) {
    any_timeout |= row.timeout;
    if (g.json) {
      rows.push_back({{"sweep_var", row.sweep_var},
                      {"value", row.value},
                      {"algorithm", row.algorithm},
                      {"rep", row.rep},
                      {"elapsed_ms", row.elapsed_ms},
                      {"gain_ms", row.gain_ms},
                      {"prep_ms", row.prep_ms},
                      {"gain_evals", row.gain_evals},
                      {"nodes", row.nodes},
                      {"result", row.result},
                      {"timeout", row.timeout}});
    } else {
      *out << BenchCsvLine(row) << "\n" << std::flush;
    }
  });
  if (g.json) *out << rows.dump(2) << "\n";
  return any_timeout ? kExitTimeout : kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Budget-constrained attribute recommendation and FBC counting"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--dataset", g.dataset, "Dataset CSV (0/1 cells, header row)");
  app.add_option("--costs", g.costs, "Costs CSV (name,cost in currency units)");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--timeout-s", g.timeout_s, "Per-run time limit in seconds")
      ->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  auto* csv_flag = app.add_flag("--csv", g.csv, "CSV output");
  json_flag->excludes(csv_flag);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic dataset and costs");
  gen_cmd->add_option("--n", gen.n, "Rows")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--m", gen.m, "Attributes")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--density", gen.density, "correlated or uniform:<p>");
  gen_cmd->add_option("--cost-spec", gen.cost_spec,
                      "brackets, uniform:<amount> or range:<low>:<high>");

  MineFlags mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine the maximal frequent sets");
  mine_cmd->add_option("--tau", mine.tau, "Frequency threshold in (0, 1]");
  mine_cmd->add_option("--out", mine.out, "Output file (stdout when omitted)");

  GainFlags solve_gain;
  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Pick the attributes to add");
  AddGainOptions(solve_cmd, solve_gain);
  solve_cmd->add_option("--row", solve.row, "Record = this 0-based data row");
  solve_cmd->add_option("--attrs", solve.attrs, "Record = these attribute names");
  solve_cmd->add_option("--budget", solve.budget, "Budget in currency units");
  solve_cmd->add_option("--solver", solve.solver, "bgmfa, igmfa or ggmfa");
  solve_cmd->add_flag("--low-budget-start", solve.low_budget_start,
                      "Start the tree search at the deepest affordable level");

  GainFlags fbc_gain;
  FbcFlags fbc;
  auto* fbc_cmd = app.add_subcommand("fbc", "Count the frequent subsets of a node");
  AddGainOptions(fbc_cmd, fbc_gain);
  fbc_cmd->add_option("--node", fbc.node, "Attribute names, comma separated");
  fbc_cmd->add_option("--bits", fbc.bits, "Bit string in column order");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Timing sweep over synthetic data");
  bench_cmd->add_option("--sweep", bench.sweep, "n, m, B or tau");
  bench_cmd->add_option("--values", bench.values, "Sweep values")->delimiter(',');
  bench_cmd->add_option("--n", bench.n, "Rows");
  bench_cmd->add_option("--m", bench.m, "Attributes");
  bench_cmd->add_option("--budget", bench.budget, "Budget in currency units");
  bench_cmd->add_option("--tau", bench.tau, "Frequency threshold");
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "bgmfa, igmfa, ggmfa, fbc, afbc")
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "Repetitions");
  bench_cmd->add_option("--density", bench.density, "correlated or uniform:<p>");
  bench_cmd->add_option("--cost-spec", bench.cost_spec, "Cost spec");
  bench_cmd->add_option("--out", bench.out, "Output file (stdout when omitted)");
  bench_cmd->add_flag("--low-budget-start", bench.low_budget_start,
                      "Tree solver starts at the deepest affordable level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*gen_cmd) return RunGen(g, gen);
    if (*mine_cmd) return RunMine(g, mine);
    if (*solve_cmd) return RunSolve(g, solve_gain, solve);
    if (*fbc_cmd) return RunFbc(g, fbc_gain, fbc);
    if (*bench_cmd) return RunBenchCommand(g, bench);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (row " << e.row() << ", column "
              << e.column() << ")\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalid;
}

}  // namespace
}  // namespace gmfa

int main(int argc, char** argv) { return gmfa::Main(argc, argv); }
