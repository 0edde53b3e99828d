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

#include "gmfa/synthetic.h"

#include <algorithm>
#include <string>

namespace gmfa {
namespace {

double ParseProbability(std::string_view text) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double p = std::stod(s, &used);
    if (used == s.size() && p >= 0.0 && p <= 1.0) return p;
  } catch (const std::exception&) {
  }
  throw ValidationError("probability must be in [0, 1]: " + std::string(text));
}

}  // namespace

DensitySpec ParseDensitySpec(std::string_view text) {
  DensitySpec spec;
  if (text == "correlated") return spec;
  if (text.starts_with("uniform:")) {
    spec.uniform = ParseProbability(text.substr(8));
    return spec;
  }
  throw ValidationError("density spec must be 'correlated' or 'uniform:<p>'");
}

CostSpec ParseCostSpec(std::string_view text) {
  CostSpec spec;
  if (text == "brackets") return spec;
  if (text.starts_with("uniform:")) {
    spec.kind = CostSpec::Kind::kUniform;
    spec.low = ParseMoney(text.substr(8));
    return spec;
  }
  if (text.starts_with("range:")) {
    const std::string_view rest = text.substr(6);
    const std::size_t colon = rest.find(':');
    if (colon != std::string_view::npos) {
      spec.kind = CostSpec::Kind::kRange;
      spec.low = ParseMoney(rest.substr(0, colon));
      spec.high = ParseMoney(rest.substr(colon + 1));
      if (spec.low <= spec.high) return spec;
    }
  }
  throw ValidationError(
      "cost spec must be 'brackets', 'uniform:<amount>' or 'range:<low>:<high>'");
}

double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t low, std::int64_t high) {
  const auto span = static_cast<std::uint64_t>(high - low) + 1;
  return low + static_cast<std::int64_t>(rng() % span);
}

std::vector<Money> BracketCosts(int m, std::mt19937_64& rng) {
  std::vector<Money> costs(m);
  for (int k = 0; k < m; ++k) {
    const std::int64_t bucket = UniformInt(rng, 0, 25);
    std::int64_t dollars;
    if (bucket < 1) {
      dollars = UniformInt(rng, 1, 9);
    } else if (bucket < 10) {
      dollars = UniformInt(rng, 10, 99);
    } else if (bucket < 24) {
      dollars = UniformInt(rng, 100, 999);
    } else {
      dollars = UniformInt(rng, 1000, 3000);
    }
    costs[k] = dollars * 100;
  }
  return costs;
}

Dataset GenerateSynthetic(const SyntheticSpec& spec) {
  if (spec.n < 0 || spec.m < 1) throw ValidationError("need n >= 0 and m >= 1");
  const DensitySpec& d = spec.density;
  if (!d.uniform && (d.base_min < 0 || d.base_max > 1 || d.base_min > d.base_max ||
                     d.group_size < 1 || d.group_activation < 0 ||
                     d.group_activation > 1 || d.group_inclusion < 0 ||
                     d.group_inclusion > 1)) {
    throw ValidationError("invalid density spec");
  }
  std::mt19937_64 rng(spec.seed);

  std::vector<std::string> names;
  for (int k = 0; k < spec.m; ++k) names.push_back("A" + std::to_string(k + 1));
  std::vector<Money> costs;
  switch (spec.costs.kind) {
    case CostSpec::Kind::kBrackets:
      costs = BracketCosts(spec.m, rng);
      break;
    case CostSpec::Kind::kUniform:
      costs.assign(spec.m, spec.costs.low);
      break;
    case CostSpec::Kind::kRange:
      for (int k = 0; k < spec.m; ++k) {
        costs.push_back(UniformInt(rng, spec.costs.low, spec.costs.high));
      }
      break;
  }

  std::vector<double> base(spec.m);
  for (int k = 0; k < spec.m; ++k) {
    base[k] = d.uniform ? *d.uniform
                        : d.base_min + (d.base_max - d.base_min) * Uniform01(rng);
  }
  std::vector<AttrSet> rows;
  rows.reserve(spec.n);
  for (int r = 0; r < spec.n; ++r) {
    AttrSet row(spec.m);
    for (int k = 0; k < spec.m; ++k) {
      if (Uniform01(rng) < base[k]) row.Set(k);
    }
    if (!d.uniform) {
      for (int start = 0; start < spec.m; start += d.group_size) {
        if (Uniform01(rng) >= d.group_activation) continue;
        for (int k = start; k < std::min(spec.m, start + d.group_size); ++k) {
          if (Uniform01(rng) < d.group_inclusion) row.Set(k);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return Dataset(AttributeCatalog(std::move(names), std::move(costs)), std::move(rows));
}

}  // namespace gmfa
