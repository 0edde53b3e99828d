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

#include "gmfa/fbc.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace gmfa {
namespace {

constexpr int kMaxBruteForceLevel = 24;
constexpr int kMaxInclusionExclusionMembers = 24;

std::int64_t AndCount(const Bitset& a, const Bitset& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) total += std::popcount(wa[i] & wb[i]);
  return total;
}

Count PowerOfTwo(int exponent) { return Count(1) << exponent; }

// Depth-first search for maximal frequent sets over the column index, with
// the head-union-tail lookahead and pruning against sets already found.
class MaximalMiner {
 public:
  MaximalMiner(const Dataset& dataset, std::int64_t threshold)
      : dataset_(dataset), threshold_(threshold) {}

  std::vector<AttrSet> Run() {
    const int m = dataset_.num_attributes();
    std::vector<int> tail;
    for (int k = 0; k < m; ++k) {
      if (static_cast<std::int64_t>(dataset_.column(k).Count()) >= threshold_) {
        tail.push_back(k);
      }
    }
    AttrSet head(m);
    if (tail.empty()) return {head};
    Search(head, Bitset::Full(dataset_.num_rows()), tail);
    return found_;
  }

 private:
  bool Subsumed(const AttrSet& s) const {
    for (const auto& f : found_) {
      if (s.IsSubsetOf(f)) return true;
    }
    return false;
  }

  void Search(AttrSet& head, const Bitset& rows, const std::vector<int>& tail) {
    AttrSet everything = head;
    Bitset everything_rows = rows;
    for (int k : tail) {
      everything.Set(k);
      everything_rows &= dataset_.column(k);
    }
    if (Subsumed(everything)) return;
    if (static_cast<std::int64_t>(everything_rows.Count()) >= threshold_) {
      found_.push_back(std::move(everything));
      return;
    }
    for (std::size_t i = 0; i < tail.size(); ++i) {
      const int k = tail[i];
      const Bitset narrowed = rows & dataset_.column(k);
      std::vector<int> next;
      for (std::size_t j = i + 1; j < tail.size(); ++j) {
        if (AndCount(narrowed, dataset_.column(tail[j])) >= threshold_) {
          next.push_back(tail[j]);
        }
      }
      head.Set(k);
      if (next.empty()) {
        if (!Subsumed(head)) found_.push_back(head);
      } else {
        Search(head, narrowed, next);
      }
      head.Reset(k);
    }
  }

  const Dataset& dataset_;
  std::int64_t threshold_;
  std::vector<AttrSet> found_;
};

// Keeps the members not contained in another member; input must be sorted
// for counting so that supersets come first.
std::vector<AttrSet> DropDominated(const std::vector<AttrSet>& sorted) {
  std::vector<AttrSet> kept;
  for (const auto& s : sorted) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (s.IsSubsetOf(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

void CheckWidths(std::span<const AttrSet> members) {
  for (const auto& s : members) {
    if (s.size() != members.front().size()) {
      throw ValidationError("maximal frequent sets have mixed widths");
    }
  }
}

// Graph j during counting: X cells without edges are only counted, the rest
// carry their adjacency over earlier patterns.
struct CountState {
  int free_x = 0;
  std::vector<Bitset> adjacency;
};

// Each invocation walks one chain of simplifications, branching off a
// recursive call whenever "all of S absent" is allowed. Every invocation
// therefore ends by counting at least one subset.
Count CountRecursive(CountState state, FbcStats* stats) {
  if (stats != nullptr) ++stats->recursion_calls;
  Count count = 0;
  Count factor = 1;
  while (!state.adjacency.empty()) {
    if (stats != nullptr) ++stats->simplify_steps;
    // The widest adjacency list; the lowest attribute wins ties.
    std::size_t q_max = 0;
    std::size_t widest = state.adjacency[0].Count();
    for (std::size_t q = 1; q < state.adjacency.size(); ++q) {
      const std::size_t c = state.adjacency[q].Count();
      if (c > widest) {
        widest = c;
        q_max = q;
      }
    }
    const Bitset target = state.adjacency[q_max];
    std::vector<bool> in_s(state.adjacency.size());
    int s_size = 0;
    Bitset others(target.size());
    for (std::size_t q = 0; q < state.adjacency.size(); ++q) {
      if (state.adjacency[q] == target) {
        in_s[q] = true;
        ++s_size;
      } else {
        others |= state.adjacency[q];
      }
    }

    // S all absent: every pattern adjacent to S still needs another attribute.
    if (target.IsSubsetOf(others)) {
      CountState absent;
      absent.free_x = state.free_x;
      for (std::size_t q = 0; q < state.adjacency.size(); ++q) {
        if (!in_s[q]) absent.adjacency.push_back(state.adjacency[q]);
      }
      count += factor * CountRecursive(std::move(absent), stats);
    }
    // Some of S present: the patterns adjacent to S are satisfied.
    CountState present;
    present.free_x = state.free_x;
    for (std::size_t q = 0; q < state.adjacency.size(); ++q) {
      if (in_s[q]) continue;
      Bitset rest = state.adjacency[q] - target;
      if (rest.None()) {
        ++present.free_x;
      } else {
        present.adjacency.push_back(std::move(rest));
      }
    }
    factor *= PowerOfTwo(s_size) - 1;
    state = std::move(present);
  }
  return count + factor * PowerOfTwo(state.free_x);
}

}  // namespace

FbcConfig::FbcConfig(double tau) : tau_(tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw ValidationError("tau must be in (0, 1]");
  }
}

std::int64_t FbcConfig::Threshold(std::int64_t n) const {
  const double product = tau_ * static_cast<double>(n);
  const double nearest = std::round(product);
  if (std::fabs(product - nearest) <= 1e-9 * std::max(1.0, product)) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::ceil(product));
}

bool IsFrequent(const AttrSet& node, const Dataset& dataset, const FbcConfig& cfg) {
  return SupportCount(dataset, node) >= cfg.Threshold(dataset.num_rows());
}

void SortForCounting(std::vector<AttrSet>& items) {
  std::sort(items.begin(), items.end(), [](const AttrSet& a, const AttrSet& b) {
    const std::size_t la = a.Count();
    const std::size_t lb = b.Count();
    if (la != lb) return la > lb;
    return LexLess(a, b);
  });
}

MaximalFrequentSet MineMaximalFrequents(const Dataset& dataset,
                                        const FbcConfig& cfg) {
  MaximalMiner miner(dataset, cfg.Threshold(dataset.num_rows()));
  std::vector<AttrSet> items = miner.Run();
  SortForCounting(items);
  MaximalFrequentSet out;
  out.items = DropDominated(items);
  out.tau = cfg.tau();
  out.n = dataset.num_rows();
  out.m = dataset.num_attributes();
  out.fingerprint = dataset.fingerprint();
  return out;
}

MaximalFrequentSet ProjectMaximalFrequents(const MaximalFrequentSet& f,
                                           const AttrSet& node) {
  if (static_cast<int>(node.size()) != f.m) {
    throw ValidationError("node width does not match the maximal frequent sets");
  }
  std::vector<AttrSet> projected;
  projected.reserve(f.items.size());
  for (const auto& item : f.items) projected.push_back(item & node);
  SortForCounting(projected);
  MaximalFrequentSet out = f;
  out.items = DropDominated(projected);
  return out;
}

Count FbcBruteForce(const AttrSet& node, const Dataset& dataset,
                    const FbcConfig& cfg) {
  const std::vector<int> attrs = node.Indices();
  if (static_cast<int>(attrs.size()) > kMaxBruteForceLevel) {
    throw ValidationError("brute-force FBC is limited to 24 attributes");
  }
  const std::int64_t threshold = cfg.Threshold(dataset.num_rows());
  const int level = static_cast<int>(attrs.size());
  // rows[d]: rows containing the attributes chosen among attrs[0..d).
  std::vector<Bitset> rows(level + 1);
  rows[0] = Bitset::Full(dataset.num_rows());
  std::int64_t total = 0;
  // Include/exclude enumeration of all 2^level subsets.
  auto visit = [&](auto&& self, int depth) -> void {
    if (depth == level) {
      if (static_cast<std::int64_t>(rows[depth].Count()) >= threshold) ++total;
      return;
    }
    rows[depth + 1] = rows[depth];
    self(self, depth + 1);
    rows[depth + 1] = rows[depth];
    rows[depth + 1] &= dataset.column(attrs[depth]);
    self(self, depth + 1);
  };
  visit(visit, 0);
  return Count(total);
}

Count FbcApriori(const AttrSet& node, const Dataset& dataset, const FbcConfig& cfg) {
  const std::int64_t threshold = cfg.Threshold(dataset.num_rows());
  const int m = dataset.num_attributes();
  Count total = 0;
  if (dataset.num_rows() >= threshold) total += 1;  // the empty set

  std::vector<std::vector<int>> level;
  for (int k : node.Indices()) {
    if (static_cast<std::int64_t>(dataset.column(k).Count()) >= threshold) {
      level.push_back({k});
    }
  }
  while (!level.empty()) {
    total += level.size();
    std::unordered_set<AttrSet, BitsetHash> frequent;
    for (const auto& items : level) {
      AttrSet s(m);
      for (int k : items) s.Set(k);
      frequent.insert(std::move(s));
    }
    // Levels are kept sorted, so itemsets sharing their first k-1 items are
    // contiguous.
    std::vector<std::vector<int>> next;
    for (std::size_t a = 0; a < level.size(); ++a) {
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin())) {
          break;
        }
        std::vector<int> candidate = level[a];
        candidate.push_back(level[b].back());
        AttrSet bits(m);
        for (int k : candidate) bits.Set(k);
        bool all_subsets_frequent = true;
        for (int k : candidate) {
          bits.Reset(k);
          all_subsets_frequent = frequent.contains(bits);
          bits.Set(k);
          if (!all_subsets_frequent) break;
        }
        if (all_subsets_frequent && SupportCount(dataset, bits) >= threshold) {
          next.push_back(std::move(candidate));
        }
      }
    }
    level = std::move(next);
  }
  return total;
}

Count FbcInclusionExclusion(std::span<const AttrSet> members) {
  const int f = static_cast<int>(members.size());
  if (f > kMaxInclusionExclusionMembers) {
    throw ValidationError("inclusion-exclusion is limited to 24 members");
  }
  if (f == 0) return 0;
  CheckWidths(members);
  const int width = static_cast<int>(members.front().size());
  // weight[p]: signed number of subfamilies whose intersection has p bits.
  std::vector<std::int64_t> weight(width + 1, 0);
  std::vector<AttrSet> meet(f + 1);
  auto visit = [&](auto&& self, int next, int depth) -> void {
    for (int i = next; i < f; ++i) {
      meet[depth + 1] = depth == 0 ? members[i] : meet[depth];
      if (depth > 0) meet[depth + 1] &= members[i];
      weight[meet[depth + 1].Count()] += (depth % 2 == 0) ? 1 : -1;
      self(self, i + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);
  Count total = 0;
  for (int p = 0; p <= width; ++p) {
    if (weight[p] != 0) total += Count(weight[p]) * PowerOfTwo(p);
  }
  return total;
}

Pattern Pattern::Initial(const AttrSet& member) {
  Pattern p;
  p.cells.assign(member.size(), '0');
  member.ForEachSetBit([&](int k) { p.cells[k] = 'X'; });
  p.kx = static_cast<int>(member.Count());
  return p;
}

std::span<const int> BipartiteGraphs::Xi(int j, int k) const {
  if (!members_[j].Test(k)) return {};
  return std::span<const int>(zeros_[k]).first(prefix_[j * width_ + k]);
}

std::int64_t BipartiteGraphs::num_edges(int j) const {
  std::int64_t total = 0;
  members_[j].ForEachSetBit([&](int k) { total += prefix_[j * width_ + k]; });
  return total;
}

BipartiteGraphs ConstructBipartiteGraphs(std::span<const AttrSet> members) {
  BipartiteGraphs g;
  if (members.empty()) return g;
  CheckWidths(members);
  const int f = static_cast<int>(members.size());
  g.width_ = static_cast<int>(members.front().size());
  g.members_.assign(members.begin(), members.end());
  for (const auto& s : members) g.patterns_.push_back(Pattern::Initial(s));
  g.zeros_.resize(g.width_);
  g.prefix_.assign(static_cast<std::size_t>(f) * g.width_, 0);
  // One pass over each attribute's membership column: members lacking the
  // attribute accumulate, members holding it take the current prefix.
  for (int k = 0; k < g.width_; ++k) {
    for (int j = 0; j < f; ++j) {
      if (members[j].Test(k)) {
        g.prefix_[j * g.width_ + k] = static_cast<std::int32_t>(g.zeros_[k].size());
      } else {
        g.zeros_[k].push_back(j);
      }
    }
  }
  return g;
}

Count CountPatterns(const BipartiteGraphs& graphs, int j, FbcStats* stats) {
  CountState state;
  graphs.member(j).ForEachSetBit([&](int k) {
    const auto xi = graphs.Xi(j, k);
    if (xi.empty()) {
      ++state.free_x;
      return;
    }
    Bitset adjacency(graphs.size());
    for (int l : xi) adjacency.Set(l);
    state.adjacency.push_back(std::move(adjacency));
  });
  return CountRecursive(state, stats);
}

bool Rule1Assigns(const BipartiteGraphs& graphs, int j, const AttrSet& node) {
  if (!node.IsSubsetOf(graphs.member(j))) return false;
  std::vector<bool> satisfied(j, false);
  node.ForEachSetBit([&](int k) {
    for (int l : graphs.Xi(j, k)) satisfied[l] = true;
  });
  return std::all_of(satisfied.begin(), satisfied.end(), [](bool b) { return b; });
}

Count Fbc(std::span<const AttrSet> members, FbcStats* stats) {
  std::vector<AttrSet> sorted(members.begin(), members.end());
  SortForCounting(sorted);
  const BipartiteGraphs graphs = ConstructBipartiteGraphs(sorted);
  Count total = 0;
  for (int j = 0; j < graphs.size(); ++j) total += CountPatterns(graphs, j, stats);
  return total;
}

std::string WriteMaximalFrequents(const MaximalFrequentSet& f) {
  char tau[64];
  const auto res = std::to_chars(tau, tau + sizeof(tau), f.tau);
  std::string out = "tau=" + std::string(tau, res.ptr) + " n=" +
                    std::to_string(f.n) + " m=" + std::to_string(f.m) + "\n";
  for (const auto& item : f.items) {
    out += item.ToString();
    out += '\n';
  }
  return out;
}

MaximalFrequentSet ReadMaximalFrequents(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(ParseErrorKind::kEmptyInput, 1, 0, "empty maximal-set file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  MaximalFrequentSet f;
  {
    std::istringstream header(line);
    std::string tau_field, n_field, m_field, extra;
    header >> tau_field >> n_field >> m_field;
    auto value = [&](const std::string& field, std::string_view key) {
      if (field.rfind(key, 0) != 0) {
        throw ParseError(ParseErrorKind::kBadCell, 1, 0,
                         "expected header 'tau=<v> n=<n> m=<m>'");
      }
      return field.substr(key.size());
    };
    try {
      std::size_t used = 0;
      const std::string tau = value(tau_field, "tau=");
      f.tau = std::stod(tau, &used);
      if (used != tau.size()) throw std::invalid_argument("tau");
      const std::string n = value(n_field, "n=");
      f.n = std::stoll(n, &used);
      if (used != n.size()) throw std::invalid_argument("n");
      const std::string m = value(m_field, "m=");
      f.m = std::stoi(m, &used);
      if (used != m.size()) throw std::invalid_argument("m");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(ParseErrorKind::kBadCell, 1, 0, "malformed header: " + line);
    }
    if (header >> extra || f.n < 0 || f.m < 1) {
      throw ParseError(ParseErrorKind::kBadCell, 1, 0, "malformed header: " + line);
    }
    FbcConfig check(f.tau);  // validates the range
  }
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (static_cast<int>(line.size()) != f.m) {
      throw ParseError(ParseErrorKind::kRowWidthMismatch, row, 0,
                       "expected " + std::to_string(f.m) + " bits");
    }
    try {
      f.items.push_back(Bitset::FromString(line));
    } catch (const std::invalid_argument&) {
      throw ParseError(ParseErrorKind::kNonBinaryCell, row, 0, "not a bit string: " + line);
    }
  }
  SortForCounting(f.items);
  f.items = DropDominated(f.items);
  return f;
}

}  // namespace gmfa
