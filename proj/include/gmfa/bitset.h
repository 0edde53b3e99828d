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

// Fixed-width bit vector used for attribute sets (width m) and row sets
// (width n). Bit 0 is the leftmost character of the string form, so
// "1010" has bits 0 and 2 set.

#ifndef GMFA_BITSET_H_
#define GMFA_BITSET_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gmfa {

class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  // Parses a big-endian 0/1 string. Throws std::invalid_argument on any
  // other character.
  static Bitset FromString(std::string_view bits);
  // All bits set.
  static Bitset Full(std::size_t width);

  std::size_t size() const { return width_; }

  bool Test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void Set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void Reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void Assign(std::size_t i, bool value) {
    if (value) {
      Set(i);
    } else {
      Reset(i);
    }
  }
  void Flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t Count() const;
  bool None() const;
  bool Any() const { return !None(); }
  bool All() const { return Count() == width_; }

  bool IsSubsetOf(const Bitset& other) const;
  bool Intersects(const Bitset& other) const;

  // Index of the lowest set bit at or after `from`, or npos.
  std::size_t FindNext(std::size_t from) const;
  std::size_t FindFirst() const { return FindNext(0); }

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  Bitset& operator^=(const Bitset& other);
  // Set difference.
  Bitset& operator-=(const Bitset& other);

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  std::string ToString() const;
  std::vector<int> Indices() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t Hash() const;

  template <typename Fn>
  void ForEachSetBit(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        fn(static_cast<int>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

// Order of the big-endian strings: the first differing position decides, and
// the operand holding 0 there is smaller. For equal widths this is the order
// of the decimal node index.
bool LexLess(const Bitset& a, const Bitset& b);

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.Hash(); }
};

// An attribute set over the m catalog attributes.
using AttrSet = Bitset;

}  // namespace gmfa

#endif  // GMFA_BITSET_H_
