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

#include "gmfa/solver.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_set>

namespace gmfa {
namespace {

constexpr double kRelativeTolerance = 1e-9;
constexpr int kMaxBaselineAttributes = 62;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Prepared {
  AttrSet base;                // A_t
  std::vector<int> flexible;   // A' = flexible \ A_t, ascending index
};

Prepared Prepare(const SolveRequest& request, const Dataset& dataset) {
  if (request.gain == nullptr) throw ValidationError("solve needs a gain function");
  if (request.budget < 0) throw ValidationError("budget must be non-negative");
  const std::size_t m = dataset.num_attributes();
  if (request.tuple_attrs.size() != m) {
    throw ValidationError("tuple attribute set has the wrong width");
  }
  if (request.flexible && request.flexible->size() != m) {
    throw ValidationError("flexible attribute set has the wrong width");
  }
  Prepared p;
  p.base = request.tuple_attrs;
  const AttrSet flexible =
      request.flexible ? *request.flexible : dataset.FullSet();
  p.flexible = (flexible - request.tuple_attrs).Indices();
  return p;
}

// Evaluates gain(A_t | A_v) and keeps the counters.
class Evaluator {
 public:
  Evaluator(const SolveRequest& request, const Dataset& dataset,
            const AttrSet& base, SolveStats& stats)
      : gain_(*request.gain), dataset_(dataset), base_(base), stats_(stats) {}

  double operator()(const AttrSet& added) {
    const auto start = Clock::now();
    const double g = gain_.Evaluate(base_ | added, dataset_);
    stats_.gain_ms += MillisSince(start);
    ++stats_.gain_evals;
    return g;
  }

 private:
  const GainFunction& gain_;
  const Dataset& dataset_;
  const AttrSet& base_;
  SolveStats& stats_;
};

bool Expired(const SolveOptions& options) {
  return options.deadline && Clock::now() >= *options.deadline;
}

// Keeps the incumbent; equal gains resolve to the smaller bit string.
class Incumbent {
 public:
  explicit Incumbent(bool integral) : integral_(integral) {}

  void Offer(const AttrSet& attrs, double gain) {
    if (!has_value_ || GainBetter(gain, gain_, integral_) ||
        (GainsEqual(gain, gain_, integral_) && LexLess(attrs, attrs_))) {
      has_value_ = true;
      attrs_ = attrs;
      gain_ = gain;
    }
  }

  bool has_value() const { return has_value_; }
  const AttrSet& attrs() const { return attrs_; }
  double gain() const { return gain_; }

 private:
  bool integral_;
  bool has_value_ = false;
  AttrSet attrs_;
  double gain_ = 0;
};

}  // namespace

bool GainsEqual(double a, double b, bool integral) {
  if (integral || a == b) return a == b;
  return std::fabs(a - b) <= kRelativeTolerance * std::max(std::fabs(a), std::fabs(b));
}

bool GainBetter(double a, double b, bool integral) {
  return a > b && !GainsEqual(a, b, integral);
}

SolveResult SolveBaseline(const SolveRequest& request, const Dataset& dataset) {
  const auto start = Clock::now();
  const Prepared p = Prepare(request, dataset);
  const int mp = static_cast<int>(p.flexible.size());
  if (mp > kMaxBaselineAttributes) {
    throw ValidationError("baseline solver supports at most 62 flexible attributes");
  }
  const auto& catalog = dataset.catalog();
  SolveResult result;
  Evaluator eval(request, dataset, p.base, result.stats);
  Incumbent best(request.gain->integral());

  const std::uint64_t limit = std::uint64_t{1} << mp;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if ((mask & 1023) == 0 && Expired(request.options)) {
      result.stats.timed_out = true;
      break;
    }
    ++result.stats.nodes_generated;
    Money cost = 0;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      cost += catalog.cost(p.flexible[std::countr_zero(bits)]);
    }
    if (cost > request.budget) continue;
    AttrSet added(dataset.num_attributes());
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      added.Set(p.flexible[std::countr_zero(bits)]);
    }
    best.Offer(added, eval(added));
  }
  result.chosen = best.has_value() ? best.attrs() : dataset.EmptySet();
  result.gain_value = best.gain();
  result.stats.elapsed_ms = MillisSince(start);
  return result;
}

SolveResult SolveImproved(const SolveRequest& request, const Dataset& dataset) {
  const auto start = Clock::now();
  const Prepared p = Prepare(request, dataset);
  const auto& catalog = dataset.catalog();
  const bool integral = request.gain->integral();
  SolveResult result;
  Evaluator eval(request, dataset, p.base, result.stats);

  AttrSet root(dataset.num_attributes());
  for (int k : p.flexible) root.Set(k);

  std::deque<AttrSet> queue;
  std::unordered_set<AttrSet, BitsetHash> queued;
  std::unordered_set<AttrSet, BitsetHash> feasible;
  queue.push_back(root);
  queued.insert(root);
  result.stats.nodes_generated = 1;

  bool have_best = false;
  double max_gain = 0;
  AttrSet best = dataset.EmptySet();
  std::int64_t steps = 0;

  while (!queue.empty()) {
    if ((++steps & 255) == 0 && Expired(request.options)) {
      result.stats.timed_out = true;
      break;
    }
    AttrSet v = std::move(queue.front());
    queue.pop_front();
    const double g = eval(v);
    if (have_best && !GainBetter(g, max_gain, integral)) continue;
    bool has_feasible_parent = false;
    for (int k : p.flexible) {
      if (v.Test(k)) continue;
      v.Set(k);
      has_feasible_parent = feasible.contains(v);
      v.Reset(k);
      if (has_feasible_parent) break;
    }
    if (has_feasible_parent) continue;
    if (catalog.CostOf(v) <= request.budget) {
      feasible.insert(v);
      have_best = true;
      max_gain = g;
      best = v;
    } else {
      v.ForEachSetBit([&](int k) {
        AttrSet child = v;
        child.Reset(k);
        ++result.stats.nodes_generated;
        if (queued.insert(child).second) queue.push_back(std::move(child));
      });
    }
  }
  result.chosen = best;
  result.gain_value = max_gain;
  result.stats.elapsed_ms = MillisSince(start);
  return result;
}

SolveResult SolveGeneral(const SolveRequest& request, const Dataset& dataset) {
  const auto start = Clock::now();
  const Prepared p = Prepare(request, dataset);
  const auto& catalog = dataset.catalog();
  const int m = dataset.num_attributes();
  SolveResult result;
  Evaluator eval(request, dataset, p.base, result.stats);
  Incumbent best(request.gain->integral());

  // A' sorted by descending cost, ties by ascending index.
  std::vector<int> sorted;
  for (int k : catalog.order()) {
    if (std::binary_search(p.flexible.begin(), p.flexible.end(), k)) {
      sorted.push_back(k);
    }
  }
  const int mp = static_cast<int>(sorted.size());
  std::vector<Money> cost(mp);
  Money total = 0;
  for (int j = 0; j < mp; ++j) {
    cost[j] = catalog.cost(sorted[j]);
    total += cost[j];
  }

  struct Entry {
    AttrSet node;
    int last;  // position of the last attribute removed; -1 for the root
    Money sigma;
  };
  std::deque<Entry> queue;
  auto push = [&](Entry e) {
    ++result.stats.nodes_generated;
    if (request.options.node_observer) request.options.node_observer(e.node);
    queue.push_back(std::move(e));
  };

  AttrSet root(m);
  for (int k : sorted) root.Set(k);

  // Largest affordable level: keep the cheapest attributes while they fit.
  int max_level = 0;
  {
    Money acc = 0;
    for (int j = mp - 1; j >= 0 && acc + cost[j] <= request.budget; --j) {
      acc += cost[j];
      ++max_level;
    }
  }
  if (request.options.low_budget_start && max_level < mp) {
    // Seed with every node of level max_level: remove r positions, entering
    // each with the largest removed position as its tree label.
    const int r = mp - max_level;
    std::vector<int> removed(r);
    for (int i = 0; i < r; ++i) removed[i] = i;
    while (true) {
      AttrSet node = root;
      Money sigma = total;
      for (int j : removed) {
        node.Reset(sorted[j]);
        sigma -= cost[j];
      }
      push({std::move(node), removed.back(), sigma});
      int i = r - 1;
      while (i >= 0 && removed[i] == mp - r + i) --i;
      if (i < 0) break;
      ++removed[i];
      for (int k = i + 1; k < r; ++k) removed[k] = removed[k - 1] + 1;
    }
  } else {
    push({root, -1, total});
  }

  std::int64_t steps = 0;
  while (!queue.empty()) {
    if ((++steps & 255) == 0 && Expired(request.options)) {
      result.stats.timed_out = true;
      break;
    }
    Entry e = std::move(queue.front());
    queue.pop_front();
    if (e.sigma <= request.budget) {
      best.Offer(e.node, eval(e.node));
      continue;
    }
    for (int j = e.last + 1; j < mp; ++j) {
      AttrSet child = e.node;
      child.Reset(sorted[j]);
      push({std::move(child), j, e.sigma - cost[j]});
    }
  }
  result.chosen = best.has_value() ? best.attrs() : dataset.EmptySet();
  result.gain_value = best.gain();
  result.stats.elapsed_ms = MillisSince(start);
  return result;
}

SolverKind ParseSolverKind(std::string_view name) {
  if (name == "b" || name == "baseline" || name == "bgmfa") {
    return SolverKind::kBaseline;
  }
  if (name == "i" || name == "improved" || name == "igmfa") {
    return SolverKind::kImproved;
  }
  if (name == "g" || name == "general" || name == "ggmfa") {
    return SolverKind::kGeneral;
  }
  throw ValidationError("unknown solver: " + std::string(name));
}

std::string SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBaseline:
      return "bgmfa";
    case SolverKind::kImproved:
      return "igmfa";
    case SolverKind::kGeneral:
      return "ggmfa";
  }
  return "unknown";
}

SolveResult Solve(SolverKind kind, const SolveRequest& request,
                  const Dataset& dataset) {
  switch (kind) {
    case SolverKind::kBaseline:
      return SolveBaseline(request, dataset);
    case SolverKind::kImproved:
      return SolveImproved(request, dataset);
    case SolverKind::kGeneral:
      return SolveGeneral(request, dataset);
  }
  throw ValidationError("unknown solver kind");
}

nlohmann::json ToJson(const SolveResult& result, const AttributeCatalog& catalog) {
  nlohmann::json out;
  out["chosen"] = catalog.NamesOf(result.chosen);
  const double g = result.gain_value;
  if (std::floor(g) == g && std::fabs(g) < 9.0e15) {
    out["gain"] = static_cast<std::int64_t>(g);
  } else {
    out["gain"] = g;
  }
  nlohmann::json stats;
  stats["nodes_generated"] = result.stats.nodes_generated;
  stats["gain_evals"] = result.stats.gain_evals;
  stats["elapsed_ms"] = result.stats.elapsed_ms;
  if (result.stats.timed_out) stats["timed_out"] = true;
  out["stats"] = std::move(stats);
  return out;
}

}  // namespace gmfa
