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

#include "efx/bundle.h"

#include <cassert>

namespace efx {

Bundle::Bundle(int universe)
    : universe_(universe), words_((static_cast<size_t>(universe) + 63) / 64) {}

Bundle Bundle::FromItems(int universe, std::span<const int> items) {
  Bundle b(universe);
  for (int item : items) {
    assert(item >= 0 && item < universe);
    b.insert(item);
  }
  return b;
}

Bundle Bundle::Full(int universe) {
  Bundle b(universe);
  for (size_t w = 0; w < b.words_.size(); ++w) b.words_[w] = ~uint64_t{0};
  if (universe % 64 != 0) {
    b.words_.back() = (uint64_t{1} << (universe % 64)) - 1;
  }
  return b;
}

int Bundle::size() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Bundle::empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Bundle Bundle::With(int item) const {
  Bundle b = *this;
  b.insert(item);
  return b;
}

Bundle Bundle::Without(int item) const {
  Bundle b = *this;
  b.erase(item);
  return b;
}

int Bundle::CountCommon(const Bundle& other) const {
  assert(universe_ == other.universe_);
  int total = 0;
  for (size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] & other.words_[w]);
  }
  return total;
}

bool Bundle::IsSubsetOf(const Bundle& other) const {
  assert(universe_ == other.universe_);
  for (size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool Bundle::IsDisjointFrom(const Bundle& other) const {
  assert(universe_ == other.universe_);
  for (size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return false;
  }
  return true;
}

int Bundle::First() const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    }
  }
  return -1;
}

std::vector<int> Bundle::items() const {
  std::vector<int> out;
  ForEach([&](int item) { out.push_back(item); });
  return out;
}

Bundle& Bundle::operator|=(const Bundle& other) {
  assert(universe_ == other.universe_);
  for (size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bundle& Bundle::operator&=(const Bundle& other) {
  assert(universe_ == other.universe_);
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bundle& Bundle::operator-=(const Bundle& other) {
  assert(universe_ == other.universe_);
  for (size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::string Bundle::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int item) {
    if (!first) out += ",";
    out += std::to_string(item);
    first = false;
  });
  return out + "}";
}

}  // namespace efx
