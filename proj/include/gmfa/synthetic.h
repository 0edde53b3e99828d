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

// Seeded synthetic marketplace data. Output depends only on the spec and the
// seed: draws come from std::mt19937_64 and are mapped to numbers by hand, not
// through the implementation-defined std distributions.

#ifndef GMFA_SYNTHETIC_H_
#define GMFA_SYNTHETIC_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "gmfa/dataset.h"

namespace gmfa {

struct DensitySpec {
  // Independent columns with this inclusion probability. Unset selects the
  // correlated generator below.
  std::optional<double> uniform;
  // Correlated generator: each column has a base probability drawn from
  // [base_min, base_max]; consecutive columns form groups that switch on
  // together with probability `group_activation`, after which each member is
  // present with probability `group_inclusion`.
  double base_min = 0.05;
  double base_max = 0.35;
  int group_size = 3;
  double group_activation = 0.35;
  double group_inclusion = 0.9;
};

// "correlated" or "uniform:<p>".
DensitySpec ParseDensitySpec(std::string_view text);

struct CostSpec {
  enum class Kind { kBrackets, kUniform, kRange };
  Kind kind = Kind::kBrackets;
  Money low = 0;   // kUniform uses low only
  Money high = 0;
};

// "brackets", "uniform:<amount>" or "range:<low>:<high>" (currency units).
CostSpec ParseCostSpec(std::string_view text);

struct SyntheticSpec {
  int n = 1000;
  int m = 10;
  DensitySpec density;
  CostSpec costs;
  std::uint64_t seed = 1;
};

// Uniform double in [0, 1) from the top 53 bits of one draw.
double Uniform01(std::mt19937_64& rng);
// Uniform integer in [low, high].
std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t low, std::int64_t high);

// Whole-dollar costs: 1 in 26 below $10, 9 in 26 in [$10, $100),
// 14 in 26 in [$100, $1000), 2 in 26 in [$1000, $3000].
std::vector<Money> BracketCosts(int m, std::mt19937_64& rng);

// Attributes are named A1..Am.
Dataset GenerateSynthetic(const SyntheticSpec& spec);

}  // namespace gmfa

#endif  // GMFA_SYNTHETIC_H_
