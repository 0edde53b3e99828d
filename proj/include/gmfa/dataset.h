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

// Dataset of n records over m attributes, the attribute catalog with costs,
// and the containment queries used by every gain function.

#ifndef GMFA_DATASET_H_
#define GMFA_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gmfa/bitset.h"

namespace gmfa {

// Money in minor currency units (cents).
using Money = std::int64_t;

// Parses a non-negative decimal amount in whole currency units ("1000",
// "12.5", "0.05") into cents. At most two fractional digits are accepted.
Money ParseMoney(std::string_view text);
std::string FormatMoney(Money cents);

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind {
  kEmptyInput,
  kDuplicateName,
  kRowWidthMismatch,
  kNonBinaryCell,
  kBadCell,
  kMissingCost,
  kDuplicateCost,
  kUnknownCostName,
  kNegativeCost,
  kBadCost,
};

// `row` and `column` are 1-based positions in the offending file (row 1 is
// the header); 0 means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int row, int column, const std::string& what)
      : std::runtime_error(what), kind_(kind), row_(row), column_(column) {}

  ParseErrorKind kind() const { return kind_; }
  int row() const { return row_; }
  int column() const { return column_; }

 private:
  ParseErrorKind kind_;
  int row_;
  int column_;
};

class AttributeCatalog {
 public:
  // `domains` defaults to 2 (binary) for every attribute.
  AttributeCatalog(std::vector<std::string> names, std::vector<Money> costs,
                   std::vector<int> domains = {});

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  Money cost(int i) const { return costs_[i]; }
  int domain(int i) const { return domains_[i]; }
  std::span<const std::string> names() const { return names_; }
  std::span<const Money> costs() const { return costs_; }
  std::span<const int> domains() const { return domains_; }

  // Attribute indices sorted by descending cost, ties by ascending index.
  std::span<const int> order() const { return order_; }

  // Throws ValidationError for an unknown name.
  int IndexOf(std::string_view name) const;
  AttrSet SetOf(std::span<const std::string> names) const;
  std::vector<std::string> NamesOf(const AttrSet& attrs) const;
  Money CostOf(const AttrSet& attrs) const;

 private:
  std::vector<std::string> names_;
  std::vector<Money> costs_;
  std::vector<int> domains_;
  std::vector<int> order_;
  std::unordered_map<std::string, int> index_;
};

class Dataset {
 public:
  // Binary dataset; every row must have width catalog.size().
  Dataset(AttributeCatalog catalog, std::vector<AttrSet> rows);
  // Ordinal dataset; values[r][k] must lie in [0, catalog.domain(k)).
  Dataset(AttributeCatalog catalog, std::vector<std::vector<int>> values);

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_attributes() const { return catalog_.size(); }
  const AttributeCatalog& catalog() const { return catalog_; }

  // A_t: the non-zero attributes of row r.
  const AttrSet& row(int r) const { return rows_[r]; }
  std::span<const AttrSet> rows() const { return rows_; }
  // Rows holding a non-zero value for attribute k, as an n-bit set.
  const Bitset& column(int k) const { return columns_[k]; }

  bool is_ordinal() const { return !values_.empty(); }
  // For binary datasets this is 0/1.
  int value(int r, int k) const;

  AttrSet EmptySet() const { return AttrSet(num_attributes()); }
  AttrSet FullSet() const { return AttrSet::Full(num_attributes()); }

  // Content hash over names and cells; used to bind mined artifacts to their
  // source data.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  void BuildIndex();

  AttributeCatalog catalog_;
  std::vector<AttrSet> rows_;
  std::vector<std::vector<int>> values_;
  std::vector<Bitset> columns_;
  std::uint64_t fingerprint_ = 0;
};

struct ParseOptions {
  // Accept small non-negative integers; Dom(A_k) becomes max value + 1
  // (at least 2).
  bool ordinal = false;
};

Dataset ParseDataset(std::string_view csv, std::string_view costs_csv,
                     const ParseOptions& options = {});
Dataset LoadDataset(const std::filesystem::path& csv_path,
                    const std::filesystem::path& costs_path,
                    const ParseOptions& options = {});

std::string ReadFile(const std::filesystem::path& path);
std::string DatasetToCsv(const Dataset& dataset);
std::string CostsToCsv(const AttributeCatalog& catalog);

// Rows r with attrs a subset of A_r, in ascending order.
std::vector<int> QueryMatch(const Dataset& dataset, const AttrSet& attrs);
// |QueryMatch(dataset, attrs)| computed as an AND-popcount over columns.
std::int64_t SupportCount(const Dataset& dataset, const AttrSet& attrs);
// Rows where value(r, k) >= thresholds[k] for every k in attrs. `thresholds`
// has one entry per attribute; entries outside attrs are ignored.
std::vector<int> QueryMatchOrdinal(const Dataset& dataset, const AttrSet& attrs,
                                   std::span<const int> thresholds);

}  // namespace gmfa

#endif  // GMFA_DATASET_H_
