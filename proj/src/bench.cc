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

#include "gmfa/bench.h"

#include <charconv>
#include <chrono>
#include <cmath>

#include "gmfa/fbc.h"
#include "gmfa/gain.h"
#include "gmfa/solver.h"

namespace gmfa {
namespace {

bool IsSolver(std::string_view a) {
  return a == "bgmfa" || a == "igmfa" || a == "ggmfa";
}

std::string FormatNumber(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string FormatGain(double g) {
  if (std::floor(g) == g && std::fabs(g) < 9.0e15) {
    return std::to_string(static_cast<std::int64_t>(g));
  }
  return FormatNumber(g);
}

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

SweepVar ParseSweepVar(std::string_view name) {
  if (name == "n") return SweepVar::kN;
  if (name == "m") return SweepVar::kM;
  if (name == "B" || name == "b" || name == "budget") return SweepVar::kBudget;
  if (name == "tau") return SweepVar::kTau;
  throw ValidationError("sweep variable must be one of n, m, B, tau");
}

std::string SweepVarName(SweepVar var) {
  switch (var) {
    case SweepVar::kN:
      return "n";
    case SweepVar::kM:
      return "m";
    case SweepVar::kBudget:
      return "B";
    case SweepVar::kTau:
      return "tau";
  }
  return "?";
}

void ValidatePlan(const BenchPlan& plan) {
  if (plan.values.empty()) throw ValidationError("sweep values must not be empty");
  for (std::size_t i = 0; i < plan.values.size(); ++i) {
    if (!(plan.values[i] > 0)) throw ValidationError("sweep values must be positive");
    if (i > 0 && plan.values[i] < plan.values[i - 1]) {
      throw ValidationError("sweep values must be sorted ascending");
    }
    if ((plan.var == SweepVar::kN || plan.var == SweepVar::kM) &&
        plan.values[i] != std::floor(plan.values[i])) {
      throw ValidationError("n and m sweep values must be integers");
    }
    if (plan.var == SweepVar::kTau && plan.values[i] > 1) {
      throw ValidationError("tau sweep values must be in (0, 1]");
    }
  }
  if (plan.algorithms.empty()) throw ValidationError("no algorithms selected");
  for (const auto& a : plan.algorithms) {
    if (!IsSolver(a) && a != "fbc" && a != "afbc") {
      throw ValidationError("unknown bench algorithm: " + a);
    }
  }
  if (plan.reps < 1) throw ValidationError("reps must be at least 1");
  if (!(plan.timeout_s > 0)) throw ValidationError("timeout must be positive");
  if (plan.n < 0 || plan.m < 1 || plan.budget < 0) {
    throw ValidationError("fixed values out of range");
  }
  FbcConfig check(plan.tau);
}

std::vector<BenchRow> RunBench(const BenchPlan& plan,
                               const std::function<void(const BenchRow&)>& on_row) {
  ValidatePlan(plan);
  std::vector<BenchRow> rows;
  for (double value : plan.values) {
    SyntheticSpec spec;
    spec.n = static_cast<int>(plan.n);
    spec.m = plan.m;
    spec.density = plan.density;
    spec.costs = plan.costs;
    spec.seed = plan.seed;
    Money budget = plan.budget;
    double tau = plan.tau;
    switch (plan.var) {
      case SweepVar::kN:
        spec.n = static_cast<int>(value);
        break;
      case SweepVar::kM:
        spec.m = static_cast<int>(value);
        break;
      case SweepVar::kBudget:
        budget = static_cast<Money>(std::llround(value * 100));
        break;
      case SweepVar::kTau:
        tau = value;
        break;
    }
    const auto prep_start = Clock::now();
    const Dataset dataset = GenerateSynthetic(spec);
    const FbcConfig cfg(tau);
    MaximalFrequentSet mined = MineMaximalFrequents(dataset, cfg);
    const double prep_ms = MillisSince(prep_start);
    const FbcGain gain(mined, dataset);

    for (const auto& algorithm : plan.algorithms) {
      for (int rep = 0; rep < plan.reps; ++rep) {
        BenchRow row;
        row.sweep_var = SweepVarName(plan.var);
        row.value = value;
        row.algorithm = algorithm;
        row.rep = rep;
        row.prep_ms = prep_ms;
        const auto start = Clock::now();
        if (IsSolver(algorithm)) {
          SolveRequest request;
          request.tuple_attrs = dataset.EmptySet();
          request.budget = budget;
          request.gain = &gain;
          request.options.low_budget_start = plan.low_budget_start;
          request.options.deadline =
              start + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(plan.timeout_s));
          const SolveResult result =
              Solve(ParseSolverKind(algorithm), request, dataset);
          row.elapsed_ms = result.stats.elapsed_ms;
          row.gain_ms = result.stats.gain_ms;
          row.gain_evals = result.stats.gain_evals;
          row.nodes = result.stats.nodes_generated;
          row.result = FormatGain(result.gain_value);
          row.timeout = result.stats.timed_out;
        } else {
          const AttrSet full = dataset.FullSet();
          Count count;
          if (algorithm == "fbc") {
            count = Fbc(ProjectMaximalFrequents(mined, full).items);
          } else {
            count = FbcApriori(full, dataset, cfg);
          }
          row.elapsed_ms = MillisSince(start);
          row.gain_ms = row.elapsed_ms;
          row.gain_evals = 1;
          row.result = count.str();
          row.timeout = row.elapsed_ms > plan.timeout_s * 1000.0;
        }
        if (on_row) on_row(row);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string BenchCsvHeader() {
  return "sweep_var,value,algorithm,rep,elapsed_ms,gain_ms,prep_ms,gain_evals,nodes,"
         "result,timeout";
}

std::string BenchCsvLine(const BenchRow& row) {
  return row.sweep_var + "," + FormatNumber(row.value) + "," + row.algorithm + "," +
         std::to_string(row.rep) + "," + FormatNumber(row.elapsed_ms) + "," +
         FormatNumber(row.gain_ms) + "," + FormatNumber(row.prep_ms) + "," +
         std::to_string(row.gain_evals) + "," + std::to_string(row.nodes) + "," +
         row.result + "," + (row.timeout ? "1" : "0");
}

}  // namespace gmfa
