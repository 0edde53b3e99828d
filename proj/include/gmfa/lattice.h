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

// The virtual lattice of attribute combinations and its spanning trees.
//
// Nodes are values; nothing here materializes the lattice. Bit positions are
// 0-based in code and 1-based (from the left) in Rho(), matching the string
// form "1010". Costs are passed per bit position, so callers that want the
// cheapest-parent property order positions by descending cost first.

#ifndef GMFA_LATTICE_H_
#define GMFA_LATTICE_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "gmfa/bitset.h"
#include "gmfa/dataset.h"

namespace gmfa {

struct LatticeNode {
  AttrSet bits;
  int level = 0;
  Money cost = 0;

  friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

LatticeNode MakeNode(AttrSet bits, std::span<const Money> costs);

// One parent per bit of `root` missing from v.
std::vector<LatticeNode> LatticeParents(const LatticeNode& v,
                                        const AttrSet& root,
                                        std::span<const Money> costs);

inline bool IsAffordable(const LatticeNode& v, Money budget) {
  return v.cost <= budget;
}

// Affordable, and adding the cheapest attribute of root \ v breaks the budget.
bool IsMaximalAffordable(const LatticeNode& v, const AttrSet& root,
                         std::span<const Money> costs, Money budget);

// 1-based position from the left of the rightmost 0 bit; 0 for all ones.
int Rho(const AttrSet& bits);

// Broadcast-tree children: clear each set bit strictly right of Rho().
std::vector<LatticeNode> TreeChildren(const LatticeNode& v,
                                      std::span<const Money> costs);

// Sets bit Rho(v). Throws std::domain_error on the all-ones root.
LatticeNode TreeParent(const LatticeNode& v, std::span<const Money> costs);

// Ordinal generalization. Vectors are offsets in [0, root[k]]; a component's
// cost is the sum of its per-step costs, step_costs[k][s] being the price of
// moving from offset s to s + 1.
class OrdinalSpace {
 public:
  OrdinalSpace(std::vector<int> root, std::vector<std::vector<Money>> step_costs);

  int width() const { return static_cast<int>(root_.size()); }
  std::span<const int> root() const { return root_; }
  Money StepCost(int k, int from) const { return step_costs_[k][from]; }
  // Cost of offset `value` on component k relative to offset 0.
  Money ComponentCost(int k, int value) const { return prefix_[k][value]; }
  // Number of vectors dominated by the root.
  long double Size() const;

 private:
  std::vector<int> root_;
  std::vector<std::vector<Money>> step_costs_;
  std::vector<std::vector<Money>> prefix_;
};

struct OrdinalNode {
  std::vector<int> vec;
  int level = 0;
  Money cost = 0;

  friend bool operator==(const OrdinalNode&, const OrdinalNode&) = default;
};

OrdinalNode MakeOrdinalNode(std::vector<int> vec, const OrdinalSpace& space);

std::vector<OrdinalNode> DagParents(const OrdinalNode& v,
                                    const OrdinalSpace& space);

// Children for which v is the minimum-index parent, where the index reads the
// vector as a base-maxD number with component 0 most significant. That parent
// raises the rightmost component still below the root, so v emits v - e_k
// exactly when every component right of k already equals the root.
std::vector<OrdinalNode> DagTreeChildren(const OrdinalNode& v,
                                         const OrdinalSpace& space);

// Throws std::domain_error on the root.
OrdinalNode DagTreeParent(const OrdinalNode& v, const OrdinalSpace& space);

}  // namespace gmfa

#endif  // GMFA_LATTICE_H_
