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

#include "gmfa/dataset.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace gmfa {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  // Trailing blank lines are not records.
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> SplitCells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(',', start);
    if (end == std::string_view::npos) {
      cells.push_back(Trim(line.substr(start)));
      break;
    }
    cells.push_back(Trim(line.substr(start, end - start)));
    start = end + 1;
  }
  return cells;
}

std::optional<int> ParseSmallInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    return std::nullopt;
  }
  return value;
}

std::string Where(int row, int column) {
  return " (row " + std::to_string(row) + ", column " +
         std::to_string(column) + ")";
}

std::uint64_t Mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

}  // namespace

Money ParseMoney(std::string_view text) {
  text = Trim(text);
  if (text.empty()) throw ValidationError("empty money amount");
  if (text.front() == '-') {
    throw ValidationError("negative money amount: " + std::string(text));
  }
  if (text.front() == '+') text.remove_prefix(1);
  const std::size_t dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) {
    throw ValidationError("malformed money amount: " + std::string(text));
  }
  while (frac.size() > 2 && frac.back() == '0') frac.remove_suffix(1);
  if (frac.size() > 2) {
    throw ValidationError("money has more than two fractional digits: " +
                          std::string(text));
  }
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(whole) || !all_digits(frac)) {
    throw ValidationError("malformed money amount: " + std::string(text));
  }
  Money units = 0;
  if (!whole.empty()) {
    auto [ptr, ec] =
        std::from_chars(whole.data(), whole.data() + whole.size(), units);
    if (ec != std::errc() || units > (INT64_MAX / 100) - 1) {
      throw ValidationError("money amount out of range: " + std::string(text));
    }
  }
  Money cents = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    cents = cents * 10 + (i < frac.size() ? frac[i] - '0' : 0);
  }
  return units * 100 + cents;
}

std::string FormatMoney(Money cents) {
  const bool negative = cents < 0;
  const Money abs_cents = negative ? -cents : cents;
  std::string out = (negative ? "-" : "") + std::to_string(abs_cents / 100);
  const Money frac = abs_cents % 100;
  if (frac != 0) {
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
  }
  return out;
}

AttributeCatalog::AttributeCatalog(std::vector<std::string> names,
                                   std::vector<Money> costs,
                                   std::vector<int> domains)
    : names_(std::move(names)),
      costs_(std::move(costs)),
      domains_(std::move(domains)) {
  if (names_.empty()) throw ValidationError("catalog needs at least one attribute");
  if (costs_.size() != names_.size()) {
    throw ValidationError("catalog needs exactly one cost per attribute");
  }
  if (domains_.empty()) domains_.assign(names_.size(), 2);
  if (domains_.size() != names_.size()) {
    throw ValidationError("catalog needs exactly one domain per attribute");
  }
  for (int i = 0; i < size(); ++i) {
    if (costs_[i] < 0) {
      throw ValidationError("negative cost for attribute " + names_[i]);
    }
    if (domains_[i] < 2) {
      throw ValidationError("domain of " + names_[i] + " must be at least 2");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw ValidationError("duplicate attribute name " + names_[i]);
    }
  }
  order_.resize(names_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [this](int a, int b) { return costs_[a] > costs_[b]; });
}

int AttributeCatalog::IndexOf(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw ValidationError("unknown attribute: " + std::string(name));
  }
  return it->second;
}

AttrSet AttributeCatalog::SetOf(std::span<const std::string> names) const {
  AttrSet out(size());
  for (const auto& n : names) out.Set(IndexOf(n));
  return out;
}

std::vector<std::string> AttributeCatalog::NamesOf(const AttrSet& attrs) const {
  std::vector<std::string> out;
  attrs.ForEachSetBit([&](int k) { out.push_back(names_[k]); });
  return out;
}

Money AttributeCatalog::CostOf(const AttrSet& attrs) const {
  Money total = 0;
  attrs.ForEachSetBit([&](int k) { total += costs_[k]; });
  return total;
}

Dataset::Dataset(AttributeCatalog catalog, std::vector<AttrSet> rows)
    : catalog_(std::move(catalog)), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != catalog_.size()) {
      throw ValidationError("row width does not match attribute count");
    }
  }
  BuildIndex();
}

Dataset::Dataset(AttributeCatalog catalog, std::vector<std::vector<int>> values)
    : catalog_(std::move(catalog)), values_(std::move(values)) {
  const int m = catalog_.size();
  rows_.reserve(values_.size());
  for (const auto& v : values_) {
    if (static_cast<int>(v.size()) != m) {
      throw ValidationError("row width does not match attribute count");
    }
    AttrSet row(m);
    for (int k = 0; k < m; ++k) {
      if (v[k] < 0 || v[k] >= catalog_.domain(k)) {
        throw ValidationError("value outside the domain of " +
                              catalog_.name(k));
      }
      row.Assign(k, v[k] != 0);
    }
    rows_.push_back(std::move(row));
  }
  // Keep the value matrix only when some column is genuinely ordinal.
  if (std::all_of(catalog_.domains().begin(), catalog_.domains().end(),
                  [](int d) { return d == 2; })) {
    values_.clear();
  }
  BuildIndex();
}

void Dataset::BuildIndex() {
  const int n = num_rows();
  const int m = num_attributes();
  columns_.assign(m, Bitset(n));
  for (int r = 0; r < n; ++r) {
    rows_[r].ForEachSetBit([&](int k) { columns_[k].Set(r); });
  }
  std::uint64_t h = Mix(0, static_cast<std::uint64_t>(n));
  h = Mix(h, static_cast<std::uint64_t>(m));
  for (int k = 0; k < m; ++k) {
    h = Mix(h, std::hash<std::string>()(catalog_.name(k)));
    h = Mix(h, static_cast<std::uint64_t>(catalog_.domain(k)));
  }
  for (int r = 0; r < n; ++r) {
    if (is_ordinal()) {
      for (int v : values_[r]) h = Mix(h, static_cast<std::uint64_t>(v));
    } else {
      for (auto w : rows_[r].words()) h = Mix(h, w);
    }
  }
  fingerprint_ = h == 0 ? 1 : h;
}

int Dataset::value(int r, int k) const {
  return is_ordinal() ? values_[r][k] : (rows_[r].Test(k) ? 1 : 0);
}

Dataset ParseDataset(std::string_view csv, std::string_view costs_csv,
                     const ParseOptions& options) {
  const auto lines = SplitLines(csv);
  if (lines.empty() || Trim(lines[0]).empty()) {
    throw ParseError(ParseErrorKind::kEmptyInput, 1, 0,
                     "dataset has no header row");
  }
  std::vector<std::string> names;
  {
    std::unordered_map<std::string, int> seen;
    const auto header = SplitCells(lines[0]);
    for (std::size_t c = 0; c < header.size(); ++c) {
      std::string name(header[c]);
      if (name.empty() || !seen.emplace(name, c).second) {
        throw ParseError(ParseErrorKind::kDuplicateName, 1,
                         static_cast<int>(c + 1),
                         "empty or duplicate attribute name '" + name + "'" +
                             Where(1, static_cast<int>(c + 1)));
      }
      names.push_back(std::move(name));
    }
  }
  const int m = static_cast<int>(names.size());

  std::vector<std::vector<int>> values;
  values.reserve(lines.size() - 1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const int row = static_cast<int>(li + 1);
    const auto cells = SplitCells(lines[li]);
    if (static_cast<int>(cells.size()) != m) {
      throw ParseError(ParseErrorKind::kRowWidthMismatch, row,
                       static_cast<int>(cells.size()),
                       "expected " + std::to_string(m) + " cells, found " +
                           std::to_string(cells.size()) + " in row " +
                           std::to_string(row));
    }
    std::vector<int> v(m);
    for (int c = 0; c < m; ++c) {
      const auto parsed = ParseSmallInt(cells[c]);
      if (!parsed) {
        throw ParseError(ParseErrorKind::kBadCell, row, c + 1,
                         "cell '" + std::string(cells[c]) +
                             "' is not a non-negative integer" + Where(row, c + 1));
      }
      if (!options.ordinal && *parsed > 1) {
        throw ParseError(ParseErrorKind::kNonBinaryCell, row, c + 1,
                         "non-binary cell '" + std::string(cells[c]) + "'" +
                             Where(row, c + 1));
      }
      v[c] = *parsed;
    }
    values.push_back(std::move(v));
  }

  // Costs: "name,cost" rows; a leading "name,cost" header is tolerated.
  std::vector<std::optional<Money>> costs(m);
  std::unordered_map<std::string, int> index;
  for (int k = 0; k < m; ++k) index.emplace(names[k], k);
  const auto cost_lines = SplitLines(costs_csv);
  for (std::size_t li = 0; li < cost_lines.size(); ++li) {
    const int row = static_cast<int>(li + 1);
    if (Trim(cost_lines[li]).empty()) continue;
    const auto cells = SplitCells(cost_lines[li]);
    if (cells.size() != 2) {
      throw ParseError(ParseErrorKind::kBadCost, row, 0,
                       "cost rows must be 'name,cost' (row " +
                           std::to_string(row) + ")");
    }
    if (li == 0 && cells[0] == "name" && cells[1] == "cost" &&
        !index.contains("name")) {
      continue;
    }
    auto it = index.find(std::string(cells[0]));
    if (it == index.end()) {
      throw ParseError(ParseErrorKind::kUnknownCostName, row, 1,
                       "cost for unknown attribute '" + std::string(cells[0]) +
                           "'" + Where(row, 1));
    }
    if (costs[it->second]) {
      throw ParseError(ParseErrorKind::kDuplicateCost, row, 1,
                       "duplicate cost for '" + std::string(cells[0]) + "'" +
                           Where(row, 1));
    }
    if (!cells[1].empty() && cells[1].front() == '-') {
      throw ParseError(ParseErrorKind::kNegativeCost, row, 2,
                       "negative cost for '" + std::string(cells[0]) + "'" +
                           Where(row, 2));
    }
    try {
      costs[it->second] = ParseMoney(cells[1]);
    } catch (const ValidationError& e) {
      throw ParseError(ParseErrorKind::kBadCost, row, 2,
                       std::string(e.what()) + Where(row, 2));
    }
  }
  std::vector<Money> cost_values(m);
  for (int k = 0; k < m; ++k) {
    if (!costs[k]) {
      throw ParseError(ParseErrorKind::kMissingCost, 0, k + 1,
                       "missing cost for attribute '" + names[k] + "'");
    }
    cost_values[k] = *costs[k];
  }

  std::vector<int> domains(m, 2);
  if (options.ordinal) {
    for (const auto& v : values) {
      for (int k = 0; k < m; ++k) domains[k] = std::max(domains[k], v[k] + 1);
    }
  }
  return Dataset(AttributeCatalog(std::move(names), std::move(cost_values),
                                  std::move(domains)),
                 std::move(values));
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dataset LoadDataset(const std::filesystem::path& csv_path,
                    const std::filesystem::path& costs_path,
                    const ParseOptions& options) {
  return ParseDataset(ReadFile(csv_path), ReadFile(costs_path), options);
}

std::string DatasetToCsv(const Dataset& dataset) {
  std::string out;
  const int m = dataset.num_attributes();
  for (int k = 0; k < m; ++k) {
    if (k > 0) out += ',';
    out += dataset.catalog().name(k);
  }
  out += '\n';
  for (int r = 0; r < dataset.num_rows(); ++r) {
    for (int k = 0; k < m; ++k) {
      if (k > 0) out += ',';
      out += std::to_string(dataset.value(r, k));
    }
    out += '\n';
  }
  return out;
}

std::string CostsToCsv(const AttributeCatalog& catalog) {
  std::string out;
  for (int k = 0; k < catalog.size(); ++k) {
    out += catalog.name(k) + "," + FormatMoney(catalog.cost(k)) + "\n";
  }
  return out;
}

std::vector<int> QueryMatch(const Dataset& dataset, const AttrSet& attrs) {
  std::vector<int> out;
  for (int r = 0; r < dataset.num_rows(); ++r) {
    if (attrs.IsSubsetOf(dataset.row(r))) out.push_back(r);
  }
  return out;
}

std::int64_t SupportCount(const Dataset& dataset, const AttrSet& attrs) {
  const int n = dataset.num_rows();
  if (attrs.None() || n == 0) return n;
  std::vector<const std::uint64_t*> cols;
  attrs.ForEachSetBit(
      [&](int k) { cols.push_back(dataset.column(k).words().data()); });
  const std::size_t num_words = dataset.column(0).words().size();
  std::int64_t total = 0;
  for (std::size_t w = 0; w < num_words; ++w) {
    std::uint64_t acc = cols[0][w];
    for (std::size_t c = 1; c < cols.size() && acc != 0; ++c) acc &= cols[c][w];
    total += std::popcount(acc);
  }
  return total;
}

std::vector<int> QueryMatchOrdinal(const Dataset& dataset, const AttrSet& attrs,
                                   std::span<const int> thresholds) {
  const int m = dataset.num_attributes();
  if (static_cast<int>(thresholds.size()) != m) {
    throw ValidationError("one threshold per attribute is required");
  }
  attrs.ForEachSetBit([&](int k) {
    if (thresholds[k] < 0 || thresholds[k] >= dataset.catalog().domain(k)) {
      throw ValidationError("threshold " + std::to_string(thresholds[k]) +
                            " outside the domain of " +
                            dataset.catalog().name(k));
    }
  });
  const auto members = attrs.Indices();
  std::vector<int> out;
  for (int r = 0; r < dataset.num_rows(); ++r) {
    bool ok = true;
    for (int k : members) {
      if (dataset.value(r, k) < thresholds[k]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

}  // namespace gmfa
