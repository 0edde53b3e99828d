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

#include <algorithm>
#include <deque>
#include <numeric>

#include "gmfa/lattice.h"
#include "gmfa/solver.h"

namespace gmfa {

double BinaryEmbeddingGain::Evaluate(std::span<const int> values,
                                     const Dataset& dataset) const {
  AttrSet attrs(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > 0) attrs.Set(k);
  }
  return gain_.Evaluate(attrs, dataset);
}

std::vector<std::vector<Money>> UniformStepCosts(const AttributeCatalog& catalog) {
  std::vector<std::vector<Money>> steps(catalog.size());
  for (int k = 0; k < catalog.size(); ++k) {
    steps[k].assign(std::max(catalog.domain(k) - 1, 0), catalog.cost(k));
  }
  return steps;
}

OrdinalSolveResult SolveGeneralOrdinal(const OrdinalSolveRequest& request,
                                       const Dataset& dataset) {
  const auto start = Clock::now();
  const auto& catalog = dataset.catalog();
  const int m = catalog.size();
  if (request.gain == nullptr) throw ValidationError("solve needs a gain function");
  if (request.budget < 0) throw ValidationError("budget must be non-negative");
  if (static_cast<int>(request.tuple_values.size()) != m ||
      static_cast<int>(request.step_costs.size()) != m ||
      (!request.max_values.empty() &&
       static_cast<int>(request.max_values.size()) != m)) {
    throw ValidationError("ordinal request has the wrong width");
  }

  // Offsets above the record's current values; the root is the largest
  // reachable upgrade.
  std::vector<int> reach(m);
  for (int k = 0; k < m; ++k) {
    const int top = request.max_values.empty() ? catalog.domain(k) - 1
                                               : request.max_values[k];
    const int cur = request.tuple_values[k];
    if (cur < 0 || cur > top) {
      throw ValidationError("record value outside its reachable range: " +
                            catalog.name(k));
    }
    if (static_cast<int>(request.step_costs[k].size()) < top) {
      throw ValidationError("step costs do not cover the domain of " +
                            catalog.name(k));
    }
    reach[k] = top - cur;
  }

  // Position order: descending cost of the first step, ties by index.
  auto first_step = [&](int k) {
    return reach[k] > 0 ? request.step_costs[k][request.tuple_values[k]] : 0;
  };
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return first_step(a) > first_step(b); });

  std::vector<int> root(m);
  std::vector<std::vector<Money>> steps(m);
  for (int p = 0; p < m; ++p) {
    const int k = order[p];
    root[p] = reach[k];
    steps[p].assign(request.step_costs[k].begin() + request.tuple_values[k],
                    request.step_costs[k].begin() + request.tuple_values[k] +
                        reach[k]);
  }
  const OrdinalSpace space(root, std::move(steps));

  OrdinalSolveResult result;
  const bool integral = request.gain->integral();
  bool have_best = false;
  std::vector<int> values(m);
  auto to_values = [&](const OrdinalNode& node) {
    for (int p = 0; p < m; ++p) {
      values[order[p]] = request.tuple_values[order[p]] + node.vec[p];
    }
  };

  std::deque<OrdinalNode> queue;
  queue.push_back(MakeOrdinalNode(root, space));
  result.stats.nodes_generated = 1;
  std::int64_t steps_taken = 0;
  while (!queue.empty()) {
    if ((++steps_taken & 255) == 0 && request.options.deadline &&
        Clock::now() >= *request.options.deadline) {
      result.stats.timed_out = true;
      break;
    }
    OrdinalNode v = std::move(queue.front());
    queue.pop_front();
    if (v.cost <= request.budget) {
      // Costs rise toward the root, so an affordable parent means v is not
      // maximal and some maximal node dominates its gain.
      bool maximal = true;
      for (const auto& parent : DagParents(v, space)) {
        if (parent.cost <= request.budget) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      to_values(v);
      const auto eval_start = Clock::now();
      const double g = request.gain->Evaluate(values, dataset);
      result.stats.gain_ms +=
          std::chrono::duration<double, std::milli>(Clock::now() - eval_start)
              .count();
      ++result.stats.gain_evals;
      if (!have_best || GainBetter(g, result.gain_value, integral) ||
          (GainsEqual(g, result.gain_value, integral) && values < result.values)) {
        have_best = true;
        result.values = values;
        result.cost = v.cost;
        result.gain_value = g;
      }
      continue;
    }
    for (auto& child : DagTreeChildren(v, space)) {
      ++result.stats.nodes_generated;
      queue.push_back(std::move(child));
    }
  }
  if (!have_best) result.values = request.tuple_values;
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

}  // namespace gmfa
