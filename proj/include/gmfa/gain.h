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

#ifndef GMFA_GAIN_H_
#define GMFA_GAIN_H_

#include <string>
#include <string_view>
#include <vector>

#include "gmfa/dataset.h"
#include "gmfa/fbc.h"
#include "gmfa/solver.h"

namespace gmfa {

enum class FbcMethod { kPatterns, kApriori, kBruteForce };
FbcMethod ParseFbcMethod(std::string_view name);

// Number of frequent subsets of the evaluated set. Bound to one dataset at
// construction; evaluating against another dataset throws ValidationError.
class FbcGain : public GainFunction {
 public:
  // Checks that `f` belongs to `dataset`: by fingerprint when it has one,
  // otherwise by n, m and the frequency of every member.
  FbcGain(MaximalFrequentSet f, const Dataset& dataset,
          FbcMethod method = FbcMethod::kPatterns, bool verify = false);

  double Evaluate(const AttrSet& attrs, const Dataset& dataset) const override;
  std::string name() const override { return "fbc"; }
  bool integral() const override { return true; }

  Count EvaluateCount(const AttrSet& attrs, const Dataset& dataset) const;
  const MaximalFrequentSet& maximal_frequents() const { return f_; }

 private:
  MaximalFrequentSet f_;
  FbcConfig cfg_;
  std::uint64_t fingerprint_;
  FbcMethod method_;
  // Cross-checks every pattern count against brute force (levels <= 24) and
  // throws std::logic_error on disagreement.
  bool verify_;
};

// Sum of the per-attribute feedback R' = R x D over the evaluated set.
class FeedbackGain : public GainFunction {
 public:
  // `scores` has one non-negative entry per row.
  FeedbackGain(const Dataset& dataset, std::vector<double> scores);

  double Evaluate(const AttrSet& attrs, const Dataset& dataset) const override;
  std::string name() const override { return "feedback"; }

  const std::vector<double>& attribute_feedback() const { return per_attribute_; }

 private:
  std::uint64_t fingerprint_;
  std::vector<double> per_attribute_;
};

// n * |{q in W : q subset of attrs}| / (|W| * |Q(attrs)|). With smoothing the
// match count is floored at 1; without it an empty match throws
// std::domain_error.
class WorkloadGain : public GainFunction {
 public:
  explicit WorkloadGain(std::vector<AttrSet> workload, bool smoothing = true);

  double Evaluate(const AttrSet& attrs, const Dataset& dataset) const override;
  std::string name() const override { return "workload"; }

 private:
  std::vector<AttrSet> workload_;
  bool smoothing_;
};

// One query per line, attribute names separated by commas. Blank lines are
// skipped.
std::vector<AttrSet> ParseWorkload(std::string_view text,
                                   const AttributeCatalog& catalog);

// "row_index,score" lines with 0-based data-row indices; an optional
// "row_index,score" header is skipped and unlisted rows score 0.
std::vector<double> ParseFeedback(std::string_view text, int num_rows);

}  // namespace gmfa

#endif  // GMFA_GAIN_H_
