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

// Frequent-item based count (FBC): the number of frequent subsets of an
// attribute set. The fast path works from the maximal frequent sets alone:
// each maximal set becomes a {0,1,X} pattern, patterns are made disjoint by
// a bipartite "must include one of" graph against every earlier pattern, and
// the graph is counted by recursive simplification. Brute force, Apriori and
// inclusion-exclusion counters are kept as oracles.

#ifndef GMFA_FBC_H_
#define GMFA_FBC_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gmfa/bitset.h"
#include "gmfa/dataset.h"

namespace gmfa {

// Counts reach 2^m.
using Count = boost::multiprecision::cpp_int;

class FbcConfig {
 public:
  // Throws ValidationError unless 0 < tau <= 1.
  explicit FbcConfig(double tau);

  double tau() const { return tau_; }
  // ceil(tau * n). Products within 1e-9 of an integer snap to it, so 0.3 * 10
  // gives 3 rather than 4.
  std::int64_t Threshold(std::int64_t n) const;

 private:
  double tau_;
};

struct MaximalFrequentSet {
  // Level descending, ties by ascending bit value (LexLess).
  std::vector<AttrSet> items;
  double tau = 0;
  std::int64_t n = 0;
  int m = 0;
  // Dataset::fingerprint() of the mined data; 0 when loaded from a file.
  std::uint64_t fingerprint = 0;
};

bool IsFrequent(const AttrSet& node, const Dataset& dataset, const FbcConfig& cfg);

MaximalFrequentSet MineMaximalFrequents(const Dataset& dataset,
                                        const FbcConfig& cfg);

// Sorts in place: level descending, then ascending bit value.
void SortForCounting(std::vector<AttrSet>& items);

// The maximal frequent subsets of `node`: {f & node}, with duplicates and
// dominated members dropped, in counting order.
MaximalFrequentSet ProjectMaximalFrequents(const MaximalFrequentSet& f,
                                           const AttrSet& node);

// Exhaustive count over all 2^level subsets. Refuses levels above 24.
Count FbcBruteForce(const AttrSet& node, const Dataset& dataset,
                    const FbcConfig& cfg);

// Levelwise candidate generation restricted to `node`.
Count FbcApriori(const AttrSet& node, const Dataset& dataset, const FbcConfig& cfg);

// Size of the union of the members' sublattices by signed subfamily sums.
// Refuses more than 24 members.
Count FbcInclusionExclusion(std::span<const AttrSet> members);

struct Pattern {
  std::string cells;  // '0', '1' or 'X' per attribute
  int kx = 0;

  // X at the set bits, 0 elsewhere.
  static Pattern Initial(const AttrSet& member);
  const std::string& ToString() const { return cells; }
};

// One pattern per member plus, for member j and attribute k of member j, the
// earlier patterns l < j with a 0 at k. Those lists are prefixes of the
// per-attribute list of members lacking k, so they are stored once.
class BipartiteGraphs {
 public:
  int size() const { return static_cast<int>(patterns_.size()); }
  int width() const { return width_; }
  const Pattern& pattern(int j) const { return patterns_[j]; }
  const AttrSet& member(int j) const { return members_[j]; }
  // Indices l < j adjacent to attribute k in graph j. Empty when k is not an
  // attribute of member j.
  std::span<const int> Xi(int j, int k) const;
  std::int64_t num_edges(int j) const;

 private:
  friend BipartiteGraphs ConstructBipartiteGraphs(std::span<const AttrSet>);

  int width_ = 0;
  std::vector<AttrSet> members_;
  std::vector<Pattern> patterns_;
  // zeros_[k]: members lacking attribute k, ascending.
  std::vector<std::vector<int>> zeros_;
  // prefix_[j * width_ + k]: length of Xi(j, k) in zeros_[k].
  std::vector<std::int32_t> prefix_;
};

// Uses `members` in the given order; one pass per attribute.
BipartiteGraphs ConstructBipartiteGraphs(std::span<const AttrSet> members);

struct FbcStats {
  // Invocations of the pattern counter.
  std::int64_t recursion_calls = 0;
  // Graph simplification steps across all invocations.
  std::int64_t simplify_steps = 0;
};

// Number of subsets of pattern j's coverage that Rule 1 assigns to it.
Count CountPatterns(const BipartiteGraphs& graphs, int j, FbcStats* stats = nullptr);

// True iff `node` lies in pattern j's coverage and, for every earlier pattern
// l, contains an attribute adjacent to l in graph j.
bool Rule1Assigns(const BipartiteGraphs& graphs, int j, const AttrSet& node);

// Sums CountPatterns over the members after sorting them for counting.
// `members` must be the maximal frequent sets of the node being counted.
Count Fbc(std::span<const AttrSet> members, FbcStats* stats = nullptr);

// Text form: "tau=<v> n=<n> m=<m>" then one bit string per line.
std::string WriteMaximalFrequents(const MaximalFrequentSet& f);
// Throws ParseError on malformed input.
MaximalFrequentSet ReadMaximalFrequents(std::string_view text);

}  // namespace gmfa

#endif  // GMFA_FBC_H_
