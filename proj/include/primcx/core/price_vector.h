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

#ifndef PRIMCX_CORE_PRICE_VECTOR_H_
#define PRIMCX_CORE_PRICE_VECTOR_H_

#include <utility>
#include <vector>

#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"

namespace primcx {

// Non-negative per-item prices, +infinity allowed.
//
// Stored as a default price plus a sorted list of per-item overrides. The
// algorithms mostly issue "price t on N, infinity elsewhere" queries with
// small N, and this layout lets demand oracles touch only the finite part.
class PriceVector {
 public:
  PriceVector() = default;
  PriceVector(int num_items, const Rational& fill);

  static PriceVector Uniform(int num_items, const Rational& t);
  // Price t on `items`, +infinity on the rest.
  static PriceVector UniformOn(const ItemSet& items, const Rational& t);
  static PriceVector Dense(const std::vector<Rational>& prices);

  int num_items() const { return num_items_; }
  const Rational& operator[](int item) const;

  void Set(int item, const Rational& price);
  // Sets every item of `items` to `price`.
  void SetOn(const ItemSet& items, const Rational& price);

  // Sum over s; +infinity if any member is priced at infinity.
  Rational PriceOf(const ItemSet& s) const;
  ItemSet FiniteItems() const;
  std::vector<Rational> ToDense() const;

  // Calls f(item, price) for finite-priced items in ascending item order.
  template <typename F>
  void ForEachFinite(F&& f) const {
    if (fill_.is_infinite()) {
      for (const auto& [item, price] : overrides_) {
        if (!price.is_infinite()) f(item, price);
      }
      return;
    }
    size_t next = 0;
    for (int item = 0; item < num_items_; ++item) {
      if (next < overrides_.size() && overrides_[next].first == item) {
        const Rational& price = overrides_[next++].second;
        if (!price.is_infinite()) f(item, price);
      } else {
        f(item, fill_);
      }
    }
  }

  friend bool operator==(const PriceVector& a, const PriceVector& b);

 private:
  static void CheckPrice(const Rational& price);

  int num_items_ = 0;
  Rational fill_;
  std::vector<std::pair<int, Rational>> overrides_;
};

}  // namespace primcx

#endif  // PRIMCX_CORE_PRICE_VECTOR_H_
