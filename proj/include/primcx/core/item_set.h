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

#ifndef PRIMCX_CORE_ITEM_SET_H_
#define PRIMCX_CORE_ITEM_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace primcx {

// Subset of the items {0, ..., m-1}, stored as a bit vector.
//
// Items are 0-based throughout the library and in every serialized format.
// Binary operations require both operands to share m and throw
// StructuralError otherwise.
class ItemSet {
 public:
  static constexpr int kMaxItems = 1 << 20;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const ItemSet* set, int item) : set_(set), item_(item) {}
    int operator*() const { return item_; }
    Iterator& operator++() {
      item_ = set_->NextAtOrAfter(item_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const {
      return item_ == other.item_;
    }

   private:
    const ItemSet* set_ = nullptr;
    int item_ = 0;
  };

  ItemSet() = default;
  explicit ItemSet(int num_items);
  ItemSet(int num_items, std::initializer_list<int> items);

  static ItemSet Full(int num_items);
  static ItemSet FromItems(int num_items, std::span<const int> items);
  // Only for num_items <= 64.
  static ItemSet FromMask(int num_items, uint64_t mask);

  int num_items() const { return num_items_; }
  int size() const;
  bool empty() const;

  bool Contains(int item) const {
    return (words_[item >> 6] >> (item & 63)) & 1;
  }
  void Insert(int item);
  void Erase(int item);

  ItemSet& operator|=(const ItemSet& other);
  ItemSet& operator&=(const ItemSet& other);
  ItemSet& operator-=(const ItemSet& other);
  friend ItemSet operator|(ItemSet a, const ItemSet& b) { return a |= b; }
  friend ItemSet operator&(ItemSet a, const ItemSet& b) { return a &= b; }
  friend ItemSet operator-(ItemSet a, const ItemSet& b) { return a -= b; }
  ItemSet Complement() const;

  bool IsSubsetOf(const ItemSet& other) const;
  bool Intersects(const ItemSet& other) const;

  // Smallest member >= item, or num_items() if none.
  int NextAtOrAfter(int item) const;
  // Smallest member, or -1 when empty.
  int First() const;
  // The index-th member in ascending order.
  int Nth(int index) const;

  Iterator begin() const { return Iterator(this, NextAtOrAfter(0)); }
  Iterator end() const { return Iterator(this, num_items_); }

  std::vector<int> ToVector() const;
  // Bit mask of the members. Only for num_items <= 64.
  uint64_t ToMask() const;
  std::span<const uint64_t> words() const { return words_; }

  // "{0,2,5}"
  std::string ToString() const;

  friend bool operator==(const ItemSet& a, const ItemSet& b) {
    return a.num_items_ == b.num_items_ && a.words_ == b.words_;
  }

  // Order by characteristic vector read as a binary number with the
  // highest item most significant.
  static bool ColexLess(const ItemSet& a, const ItemSet& b);
  // Order by the ascending member sequence, shorter prefix first.
  static bool LexLess(const ItemSet& a, const ItemSet& b);

  size_t Hash() const;

 private:
  void CheckSame(const ItemSet& other) const;
  void CheckItem(int item) const;
  void ClearTail();

  int num_items_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace primcx

template <>
struct std::hash<primcx::ItemSet> {
  size_t operator()(const primcx::ItemSet& s) const { return s.Hash(); }
};

#endif  // PRIMCX_CORE_ITEM_SET_H_
