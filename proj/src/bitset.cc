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

#include "gmfa/bitset.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gmfa {

Bitset Bitset::FromString(std::string_view bits) {
  Bitset result(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      result.Set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string must contain only 0 and 1: " +
                                  std::string(bits));
    }
  }
  return result;
}

Bitset Bitset::Full(std::size_t width) {
  Bitset result(width);
  for (auto& w : result.words_) w = ~std::uint64_t{0};
  if (width % 64 != 0 && !result.words_.empty()) {
    result.words_.back() = (std::uint64_t{1} << (width % 64)) - 1;
  }
  return result;
}

std::size_t Bitset::Count() const {
  std::size_t total = 0;
  for (const auto w : words_) total += std::popcount(w);
  return total;
}

bool Bitset::None() const {
  for (const auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Bitset::IsSubsetOf(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool Bitset::Intersects(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

std::size_t Bitset::FindNext(std::size_t from) const {
  if (from >= width_) return npos;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) return w * 64 + std::countr_zero(word);
    if (++w == words_.size()) return npos;
    word = words_[w];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::string Bitset::ToString() const {
  std::string out(width_, '0');
  ForEachSetBit([&](int i) { out[i] = '1'; });
  return out;
}

std::vector<int> Bitset::Indices() const {
  std::vector<int> out;
  ForEachSetBit([&](int i) { out.push_back(i); });
  return out;
}

std::size_t Bitset::Hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull ^ width_;
  for (const auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool LexLess(const Bitset& a, const Bitset& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  const std::size_t n = std::min(wa.size(), wb.size());
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint64_t diff = wa[w] ^ wb[w];
    if (diff != 0) {
      const int bit = std::countr_zero(diff);
      return ((wa[w] >> bit) & 1u) == 0;
    }
  }
  return a.size() < b.size();
}

}  // namespace gmfa
