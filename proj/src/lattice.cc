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

#include "gmfa/lattice.h"

#include <algorithm>
#include <limits>

namespace gmfa {

LatticeNode MakeNode(AttrSet bits, std::span<const Money> costs) {
  LatticeNode node;
  node.level = static_cast<int>(bits.Count());
  bits.ForEachSetBit([&](int k) { node.cost += costs[k]; });
  node.bits = std::move(bits);
  return node;
}

std::vector<LatticeNode> LatticeParents(const LatticeNode& v,
                                        const AttrSet& root,
                                        std::span<const Money> costs) {
  std::vector<LatticeNode> parents;
  (root - v.bits).ForEachSetBit([&](int k) {
    LatticeNode p{v.bits, v.level + 1, v.cost + costs[k]};
    p.bits.Set(k);
    parents.push_back(std::move(p));
  });
  return parents;
}

bool IsMaximalAffordable(const LatticeNode& v, const AttrSet& root,
                         std::span<const Money> costs, Money budget) {
  if (!IsAffordable(v, budget)) return false;
  Money cheapest = std::numeric_limits<Money>::max();
  (root - v.bits).ForEachSetBit(
      [&](int k) { cheapest = std::min(cheapest, costs[k]); });
  if (cheapest == std::numeric_limits<Money>::max()) return true;
  return v.cost + cheapest > budget;
}

int Rho(const AttrSet& bits) {
  for (int i = static_cast<int>(bits.size()) - 1; i >= 0; --i) {
    if (!bits.Test(i)) return i + 1;
  }
  return 0;
}

std::vector<LatticeNode> TreeChildren(const LatticeNode& v,
                                      std::span<const Money> costs) {
  std::vector<LatticeNode> children;
  // Positions after rho (1-based) start at 0-based index rho.
  for (std::size_t k = Rho(v.bits); k < v.bits.size(); ++k) {
    if (!v.bits.Test(k)) continue;
    LatticeNode c{v.bits, v.level - 1, v.cost - costs[k]};
    c.bits.Reset(k);
    children.push_back(std::move(c));
  }
  return children;
}

LatticeNode TreeParent(const LatticeNode& v, std::span<const Money> costs) {
  const int rho = Rho(v.bits);
  if (rho == 0) throw std::domain_error("the tree root has no parent");
  LatticeNode p{v.bits, v.level + 1, v.cost + costs[rho - 1]};
  p.bits.Set(rho - 1);
  return p;
}

OrdinalSpace::OrdinalSpace(std::vector<int> root,
                           std::vector<std::vector<Money>> step_costs)
    : root_(std::move(root)), step_costs_(std::move(step_costs)) {
  if (step_costs_.size() != root_.size()) {
    throw std::invalid_argument("one step-cost table per component");
  }
  prefix_.resize(root_.size());
  for (std::size_t k = 0; k < root_.size(); ++k) {
    if (root_[k] < 0 ||
        static_cast<int>(step_costs_[k].size()) < root_[k]) {
      throw std::invalid_argument("step costs must cover every root offset");
    }
    prefix_[k].assign(root_[k] + 1, 0);
    for (int s = 0; s < root_[k]; ++s) {
      if (step_costs_[k][s] < 0) {
        throw std::invalid_argument("step costs must be non-negative");
      }
      prefix_[k][s + 1] = prefix_[k][s] + step_costs_[k][s];
    }
  }
}

long double OrdinalSpace::Size() const {
  long double total = 1;
  for (int r : root_) total *= (r + 1);
  return total;
}

OrdinalNode MakeOrdinalNode(std::vector<int> vec, const OrdinalSpace& space) {
  if (static_cast<int>(vec.size()) != space.width()) {
    throw std::invalid_argument("ordinal node width mismatch");
  }
  OrdinalNode node;
  for (int k = 0; k < space.width(); ++k) {
    if (vec[k] < 0 || vec[k] > space.root()[k]) {
      throw std::invalid_argument("ordinal node outside the root's domain");
    }
    node.level += vec[k];
    node.cost += space.ComponentCost(k, vec[k]);
  }
  node.vec = std::move(vec);
  return node;
}

std::vector<OrdinalNode> DagParents(const OrdinalNode& v,
                                    const OrdinalSpace& space) {
  std::vector<OrdinalNode> parents;
  for (int k = 0; k < space.width(); ++k) {
    if (v.vec[k] == space.root()[k]) continue;
    OrdinalNode p{v.vec, v.level + 1, v.cost + space.StepCost(k, v.vec[k])};
    ++p.vec[k];
    parents.push_back(std::move(p));
  }
  return parents;
}

std::vector<OrdinalNode> DagTreeChildren(const OrdinalNode& v,
                                         const OrdinalSpace& space) {
  std::vector<OrdinalNode> children;
  const auto root = space.root();
  // Walk from the right while components sit at the root; each such
  // component, plus the first one below it, may be decremented.
  for (int k = space.width() - 1; k >= 0; --k) {
    if (v.vec[k] > 0) {
      OrdinalNode c{v.vec, v.level - 1, v.cost - space.StepCost(k, v.vec[k] - 1)};
      --c.vec[k];
      children.push_back(std::move(c));
    }
    if (v.vec[k] != root[k]) break;
  }
  std::reverse(children.begin(), children.end());
  return children;
}

OrdinalNode DagTreeParent(const OrdinalNode& v, const OrdinalSpace& space) {
  for (int k = space.width() - 1; k >= 0; --k) {
    if (v.vec[k] < space.root()[k]) {
      OrdinalNode p{v.vec, v.level + 1, v.cost + space.StepCost(k, v.vec[k])};
      ++p.vec[k];
      return p;
    }
  }
  throw std::domain_error("the tree root has no parent");
}

}  // namespace gmfa
