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

#ifndef EFX_BUNDLE_H_
#define EFX_BUNDLE_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace efx {

// A set of items drawn from the universe {0, ..., universe - 1}, stored as a
// bitset. Iteration is always in ascending item order.
class Bundle {
 public:
  Bundle() = default;
  explicit Bundle(int universe);

  static Bundle FromItems(int universe, std::span<const int> items);
  static Bundle FromItems(int universe, std::initializer_list<int> items) {
    return FromItems(universe, std::span<const int>(items.begin(), items.size()));
  }
  static Bundle Full(int universe);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const;

  bool contains(int item) const {
    return (words_[item >> 6] >> (item & 63)) & 1U;
  }
  void insert(int item) { words_[item >> 6] |= uint64_t{1} << (item & 63); }
  void erase(int item) { words_[item >> 6] &= ~(uint64_t{1} << (item & 63)); }

  // Copies with one item added or removed.
  Bundle With(int item) const;
  Bundle Without(int item) const;

  // |*this ∩ other|.
  int CountCommon(const Bundle& other) const;
  bool IsSubsetOf(const Bundle& other) const;
  bool IsDisjointFrom(const Bundle& other) const;

  // Smallest item, or -1 when empty.
  int First() const;

  // Low 64 bits of the bitset; only meaningful for universe <= 64.
  uint64_t LowBits() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<int> items() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        fn(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  Bundle& operator|=(const Bundle& other);
  Bundle& operator&=(const Bundle& other);
  Bundle& operator-=(const Bundle& other);
  friend Bundle operator|(Bundle a, const Bundle& b) { return a |= b; }
  friend Bundle operator&(Bundle a, const Bundle& b) { return a &= b; }
  friend Bundle operator-(Bundle a, const Bundle& b) { return a -= b; }

  friend bool operator==(const Bundle& a, const Bundle& b) = default;

  // "{0,3,7}"
  std::string ToString() const;

 private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace efx

#endif  // EFX_BUNDLE_H_
