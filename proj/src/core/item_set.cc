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

#include "primcx/core/item_set.h"

#include <algorithm>

#include "primcx/core/errors.h"

namespace primcx {
namespace {

int WordCount(int num_items) { return (num_items + 63) >> 6; }

}  // namespace

ItemSet::ItemSet(int num_items) : num_items_(num_items) {
  if (num_items < 0 || num_items > kMaxItems) {
    throw StructuralError("item count out of range: " +
                          std::to_string(num_items));
  }
  words_.assign(WordCount(num_items), 0);
}

ItemSet::ItemSet(int num_items, std::initializer_list<int> items)
    : ItemSet(num_items) {
  for (int item : items) Insert(item);
}

ItemSet ItemSet::Full(int num_items) {
  ItemSet s(num_items);
  std::fill(s.words_.begin(), s.words_.end(), ~uint64_t{0});
  s.ClearTail();
  return s;
}

ItemSet ItemSet::FromItems(int num_items, std::span<const int> items) {
  ItemSet s(num_items);
  for (int item : items) s.Insert(item);
  return s;
}

ItemSet ItemSet::FromMask(int num_items, uint64_t mask) {
  if (num_items > 64) throw StructuralError("FromMask needs m <= 64");
  ItemSet s(num_items);
  if (num_items > 0) s.words_[0] = mask;
  s.ClearTail();
  return s;
}

void ItemSet::ClearTail() {
  int rem = num_items_ & 63;
  if (rem != 0) words_.back() &= (uint64_t{1} << rem) - 1;
}

void ItemSet::CheckSame(const ItemSet& other) const {
  if (num_items_ != other.num_items_) {
    throw StructuralError("item set capacity mismatch: " +
                          std::to_string(num_items_) + " vs " +
                          std::to_string(other.num_items_));
  }
}

void ItemSet::CheckItem(int item) const {
  if (item < 0 || item >= num_items_) {
    throw StructuralError("item " + std::to_string(item) +
                          " outside ground set of size " +
                          std::to_string(num_items_));
  }
}

int ItemSet::size() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool ItemSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

void ItemSet::Insert(int item) {
  CheckItem(item);
  words_[item >> 6] |= uint64_t{1} << (item & 63);
}

void ItemSet::Erase(int item) {
  CheckItem(item);
  words_[item >> 6] &= ~(uint64_t{1} << (item & 63));
}

ItemSet& ItemSet::operator|=(const ItemSet& other) {
  CheckSame(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ItemSet& ItemSet::operator&=(const ItemSet& other) {
  CheckSame(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ItemSet& ItemSet::operator-=(const ItemSet& other) {
  CheckSame(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ItemSet ItemSet::Complement() const {
  ItemSet s = *this;
  for (uint64_t& w : s.words_) w = ~w;
  s.ClearTail();
  return s;
}

bool ItemSet::IsSubsetOf(const ItemSet& other) const {
  CheckSame(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ItemSet::Intersects(const ItemSet& other) const {
  CheckSame(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

int ItemSet::NextAtOrAfter(int item) const {
  if (item >= num_items_) return num_items_;
  size_t w = item >> 6;
  uint64_t bits = words_[w] & (~uint64_t{0} << (item & 63));
  while (bits == 0) {
    if (++w == words_.size()) return num_items_;
    bits = words_[w];
  }
  return static_cast<int>(w * 64 + std::countr_zero(bits));
}

int ItemSet::First() const {
  int item = NextAtOrAfter(0);
  return item == num_items_ ? -1 : item;
}

int ItemSet::Nth(int index) const {
  if (index < 0) throw StructuralError("negative member index");
  for (size_t w = 0; w < words_.size(); ++w) {
    int count = std::popcount(words_[w]);
    if (index < count) {
      uint64_t bits = words_[w];
      for (int i = 0; i < index; ++i) bits &= bits - 1;
      return static_cast<int>(w * 64 + std::countr_zero(bits));
    }
    index -= count;
  }
  throw StructuralError("member index past cardinality");
}

std::vector<int> ItemSet::ToVector() const {
  std::vector<int> out;
  for (int item : *this) out.push_back(item);
  return out;
}

uint64_t ItemSet::ToMask() const {
  if (num_items_ > 64) throw StructuralError("ToMask needs m <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string ItemSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int item : *this) {
    if (!first) out += ",";
    out += std::to_string(item);
    first = false;
  }
  return out + "}";
}

bool ItemSet::ColexLess(const ItemSet& a, const ItemSet& b) {
  a.CheckSame(b);
  for (size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

bool ItemSet::LexLess(const ItemSet& a, const ItemSet& b) {
  a.CheckSame(b);
  Iterator ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

size_t ItemSet::Hash() const {
  uint64_t h = 1469598103934665603ULL ^ static_cast<uint64_t>(num_items_);
  for (uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace primcx
