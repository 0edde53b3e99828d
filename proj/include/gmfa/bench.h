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

// Sweeps one of n, m, budget or tau over synthetic data and times the solvers
// and FBC counters. Runs are sequential and rows come out in plan order.

#ifndef GMFA_BENCH_H_
#define GMFA_BENCH_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gmfa/dataset.h"
#include "gmfa/synthetic.h"

namespace gmfa {

enum class SweepVar { kN, kM, kBudget, kTau };
SweepVar ParseSweepVar(std::string_view name);
std::string SweepVarName(SweepVar var);

struct BenchPlan {
  SweepVar var = SweepVar::kM;
  std::vector<double> values;
  std::int64_t n = 200000;
  int m = 15;
  Money budget = 200000;  // $2000
  double tau = 0.1;
  // bgmfa, igmfa, ggmfa (FBC gain, A_t empty), fbc or afbc (count of the
  // full attribute set).
  std::vector<std::string> algorithms = {"bgmfa", "igmfa", "ggmfa"};
  int reps = 1;
  double timeout_s = 60;
  std::uint64_t seed = 1;
  DensitySpec density;
  CostSpec costs;
  bool low_budget_start = false;
};

// Throws ValidationError: empty or unsorted sweep, non-positive values,
// unknown algorithm, reps < 1, non-positive timeout.
void ValidatePlan(const BenchPlan& plan);

struct BenchRow {
  std::string sweep_var;
  double value = 0;
  std::string algorithm;
  int rep = 0;
  double elapsed_ms = 0;  // wall time of the run, gain included
  double gain_ms = 0;
  double prep_ms = 0;     // data generation and mining
  std::int64_t gain_evals = 0;
  std::int64_t nodes = 0;
  std::string result;     // optimal gain or FBC value
  bool timeout = false;
};

std::vector<BenchRow> RunBench(const BenchPlan& plan,
                               const std::function<void(const BenchRow&)>& on_row = {});

std::string BenchCsvHeader();
std::string BenchCsvLine(const BenchRow& row);

}  // namespace gmfa

#endif  // GMFA_BENCH_H_
