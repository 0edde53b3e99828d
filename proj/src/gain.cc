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

#include "gmfa/gain.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gmfa {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    lines.push_back(text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

}  // namespace

FbcMethod ParseFbcMethod(std::string_view name) {
  if (name == "patterns" || name == "fbc") return FbcMethod::kPatterns;
  if (name == "apriori" || name == "afbc") return FbcMethod::kApriori;
  if (name == "bruteforce") return FbcMethod::kBruteForce;
  throw ValidationError("unknown FBC method: " + std::string(name));
}

FbcGain::FbcGain(MaximalFrequentSet f, const Dataset& dataset, FbcMethod method,
                 bool verify)
    : f_(std::move(f)),
      cfg_(f_.tau),
      fingerprint_(dataset.fingerprint()),
      method_(method),
      verify_(verify) {
  if (f_.m != dataset.num_attributes() || f_.n != dataset.num_rows()) {
    throw ValidationError("maximal frequent sets were mined from another dataset");
  }
  if (f_.fingerprint != 0) {
    if (f_.fingerprint != dataset.fingerprint()) {
      throw ValidationError("maximal frequent sets were mined from another dataset");
    }
    return;
  }
  for (const auto& item : f_.items) {
    if (!IsFrequent(item, dataset, cfg_)) {
      throw ValidationError("maximal frequent set " + item.ToString() +
                            " is not frequent in this dataset");
    }
  }
}

Count FbcGain::EvaluateCount(const AttrSet& attrs, const Dataset& dataset) const {
  if (dataset.fingerprint() != fingerprint_) {
    throw ValidationError("FBC gain evaluated against a different dataset");
  }
  switch (method_) {
    case FbcMethod::kApriori:
      return FbcApriori(attrs, dataset, cfg_);
    case FbcMethod::kBruteForce:
      return FbcBruteForce(attrs, dataset, cfg_);
    case FbcMethod::kPatterns:
      break;
  }
  const Count count = Fbc(ProjectMaximalFrequents(f_, attrs).items);
  if (verify_ && attrs.Count() <= 24) {
    const Count expected = FbcBruteForce(attrs, dataset, cfg_);
    if (count != expected) {
      throw std::logic_error("FBC of " + attrs.ToString() + " is " + count.str() +
                             " but brute force gives " + expected.str());
    }
  }
  return count;
}

double FbcGain::Evaluate(const AttrSet& attrs, const Dataset& dataset) const {
  return EvaluateCount(attrs, dataset).convert_to<double>();
}

FeedbackGain::FeedbackGain(const Dataset& dataset, std::vector<double> scores)
    : fingerprint_(dataset.fingerprint()),
      per_attribute_(dataset.num_attributes(), 0.0) {
  if (static_cast<int>(scores.size()) != dataset.num_rows()) {
    throw ValidationError("feedback needs one score per row");
  }
  for (int r = 0; r < dataset.num_rows(); ++r) {
    if (!std::isfinite(scores[r]) || scores[r] < 0) {
      throw ValidationError("feedback scores must be finite and non-negative (row " +
                            std::to_string(r) + ")");
    }
    dataset.row(r).ForEachSetBit([&](int k) { per_attribute_[k] += scores[r]; });
  }
}

double FeedbackGain::Evaluate(const AttrSet& attrs, const Dataset& dataset) const {
  if (dataset.fingerprint() != fingerprint_) {
    throw ValidationError("feedback gain evaluated against a different dataset");
  }
  double total = 0;
  attrs.ForEachSetBit([&](int k) { total += per_attribute_[k]; });
  return total;
}

WorkloadGain::WorkloadGain(std::vector<AttrSet> workload, bool smoothing)
    : workload_(std::move(workload)), smoothing_(smoothing) {
  if (workload_.empty()) throw ValidationError("workload must not be empty");
}

double WorkloadGain::Evaluate(const AttrSet& attrs, const Dataset& dataset) const {
  std::int64_t covered = 0;
  for (const auto& q : workload_) {
    if (q.size() != attrs.size()) {
      throw ValidationError("workload query has the wrong width");
    }
    if (q.IsSubsetOf(attrs)) ++covered;
  }
  std::int64_t matches = SupportCount(dataset, attrs);
  if (matches == 0) {
    if (!smoothing_) {
      throw std::domain_error("workload gain undefined: no row matches " +
                              attrs.ToString());
    }
    matches = 1;
  }
  return static_cast<double>(dataset.num_rows()) * static_cast<double>(covered) /
         (static_cast<double>(workload_.size()) * static_cast<double>(matches));
}

std::vector<AttrSet> ParseWorkload(std::string_view text,
                                   const AttributeCatalog& catalog) {
  std::vector<AttrSet> workload;
  for (std::string_view line : Lines(text)) {
    line = Trim(line);
    if (line.empty()) continue;
    AttrSet q(catalog.size());
    while (true) {
      const std::size_t comma = line.find(',');
      const std::string_view name = Trim(line.substr(0, comma));
      if (!name.empty()) q.Set(catalog.IndexOf(name));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    workload.push_back(std::move(q));
  }
  return workload;
}

std::vector<double> ParseFeedback(std::string_view text, int num_rows) {
  std::vector<double> scores(num_rows, 0.0);
  std::vector<bool> seen(num_rows, false);
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;
    if (line_no == 1 && line == "row_index,score") continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(ParseErrorKind::kBadCell, line_no, 0,
                       "expected 'row_index,score'");
    }
    const std::string index_text(Trim(line.substr(0, comma)));
    const std::string score_text(Trim(line.substr(comma + 1)));
    long long index = 0;
    double score = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("index");
      score = std::stod(score_text, &used);
      if (used != score_text.size()) throw std::invalid_argument("score");
    } catch (const std::exception&) {
      throw ParseError(ParseErrorKind::kBadCell, line_no, 0,
                       "malformed feedback line: " + std::string(line));
    }
    if (index < 0 || index >= num_rows) {
      throw ParseError(ParseErrorKind::kBadCell, line_no, 1,
                       "row index out of range: " + index_text);
    }
    if (seen[index]) {
      throw ParseError(ParseErrorKind::kBadCell, line_no, 1,
                       "duplicate row index: " + index_text);
    }
    if (!std::isfinite(score) || score < 0) {
      throw ParseError(ParseErrorKind::kBadCell, line_no, 2,
                       "feedback scores must be finite and non-negative");
    }
    seen[index] = true;
    scores[index] = score;
  }
  return scores;
}

}  // namespace gmfa
