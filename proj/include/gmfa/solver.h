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

// Exact solvers for budget-constrained gain maximization over flexible
// attributes: given a record's attributes A_t, a budget and a monotone gain,
// pick A' disjoint from A_t with cost(A') <= budget maximizing
// gain(A_t | A').
//
//   SolveBaseline  - every subset of the flexible attributes.
//   SolveImproved  - top-down BFS over the lattice with monotone pruning.
//   SolveGeneral   - BFS over the broadcast tree with cost-descending
//                    attribute order; gain is only evaluated on maximal
//                    affordable nodes.
//
// All three return the same optimal gain. Among equal-gain optima the
// baseline and the tree solver return the set with the lexicographically
// smallest bit string; the lattice BFS keeps the first optimum it records.

#ifndef GMFA_SOLVER_H_
#define GMFA_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmfa/bitset.h"
#include "gmfa/dataset.h"
#include "json.hpp"

namespace gmfa {

// A monotone set function: a subset of b implies Evaluate(a) <= Evaluate(b).
// Implementations are immutable and safe to evaluate concurrently.
class GainFunction {
 public:
  virtual ~GainFunction() = default;
  virtual double Evaluate(const AttrSet& attrs, const Dataset& dataset) const = 0;
  virtual std::string name() const = 0;
  // Integral gains are compared exactly; others with a 1e-9 relative
  // tolerance.
  virtual bool integral() const { return false; }
};

bool GainsEqual(double a, double b, bool integral);
// a beats b by more than the comparison tolerance.
bool GainBetter(double a, double b, bool integral);

using Clock = std::chrono::steady_clock;

struct SolveOptions {
  // Start the tree traversal at the deepest level any affordable node can
  // reach, skipping the unaffordable levels above it. SolveGeneral only.
  bool low_budget_start = false;
  // Cooperative time limit; the best answer found so far is returned with
  // stats.timed_out set.
  std::optional<Clock::time_point> deadline;
  // Called with every node generated by SolveGeneral (the set A_v, without
  // A_t). Used by instrumentation.
  std::function<void(const AttrSet&)> node_observer;
};

struct SolveRequest {
  AttrSet tuple_attrs;
  Money budget = 0;
  const GainFunction* gain = nullptr;
  // Attributes that may be added; all attributes when unset.
  std::optional<AttrSet> flexible;
  SolveOptions options;
};

struct SolveStats {
  std::int64_t nodes_generated = 0;
  std::int64_t gain_evals = 0;
  double elapsed_ms = 0;
  double gain_ms = 0;
  bool timed_out = false;
};

struct SolveResult {
  AttrSet chosen;
  double gain_value = 0;
  SolveStats stats;
};

SolveResult SolveBaseline(const SolveRequest& request, const Dataset& dataset);
SolveResult SolveImproved(const SolveRequest& request, const Dataset& dataset);
SolveResult SolveGeneral(const SolveRequest& request, const Dataset& dataset);

enum class SolverKind { kBaseline, kImproved, kGeneral };
SolverKind ParseSolverKind(std::string_view name);
std::string SolverName(SolverKind kind);
SolveResult Solve(SolverKind kind, const SolveRequest& request,
                  const Dataset& dataset);

// {"chosen": [names], "gain": g, "stats": {...}}
nlohmann::json ToJson(const SolveResult& result, const AttributeCatalog& catalog);

// ---------------------------------------------------------------------------
// Ordinal attributes.

// Monotone in every component of the value vector.
class OrdinalGainFunction {
 public:
  virtual ~OrdinalGainFunction() = default;
  virtual double Evaluate(std::span<const int> values,
                          const Dataset& dataset) const = 0;
  virtual std::string name() const = 0;
  virtual bool integral() const { return false; }
};

// Reads a binary gain through the embedding "value > 0 means present".
class BinaryEmbeddingGain : public OrdinalGainFunction {
 public:
  explicit BinaryEmbeddingGain(const GainFunction& gain) : gain_(gain) {}
  double Evaluate(std::span<const int> values,
                  const Dataset& dataset) const override;
  std::string name() const override { return gain_.name(); }
  bool integral() const override { return gain_.integral(); }

 private:
  const GainFunction& gain_;
};

struct OrdinalSolveRequest {
  // Current value of every attribute for the record.
  std::vector<int> tuple_values;
  // Largest reachable value per attribute (Dom(A_k) - 1 when empty).
  std::vector<int> max_values;
  // step_costs[k][v]: price of raising attribute k from v to v + 1.
  std::vector<std::vector<Money>> step_costs;
  Money budget = 0;
  const OrdinalGainFunction* gain = nullptr;
  SolveOptions options;
};

struct OrdinalSolveResult {
  std::vector<int> values;  // upgraded value vector
  Money cost = 0;
  double gain_value = 0;
  SolveStats stats;
};

// Uniform per-step cost tables from the catalog costs: every unit increase of
// attribute k costs catalog.cost(k).
std::vector<std::vector<Money>> UniformStepCosts(const AttributeCatalog& catalog);

OrdinalSolveResult SolveGeneralOrdinal(const OrdinalSolveRequest& request,
                                       const Dataset& dataset);

}  // namespace gmfa

#endif  // GMFA_SOLVER_H_
