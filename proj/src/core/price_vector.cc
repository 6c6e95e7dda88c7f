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

#include "primcx/core/price_vector.h"

#include <algorithm>

#include "primcx/core/errors.h"

namespace primcx {

PriceVector::PriceVector(int num_items, const Rational& fill)
    : num_items_(num_items), fill_(fill) {
  if (num_items < 0 || num_items > ItemSet::kMaxItems) {
    throw StructuralError("price vector size out of range");
  }
  CheckPrice(fill);
}

void PriceVector::CheckPrice(const Rational& price) {
  if (price.sign() < 0) {
    throw DomainError("negative price " + price.ToString());
  }
}

PriceVector PriceVector::Uniform(int num_items, const Rational& t) {
  return PriceVector(num_items, t);
}

PriceVector PriceVector::UniformOn(const ItemSet& items, const Rational& t) {
  PriceVector p(items.num_items(), Rational::Infinity());
  CheckPrice(t);
  p.overrides_.reserve(items.size());
  for (int item : items) p.overrides_.emplace_back(item, t);
  return p;
}

PriceVector PriceVector::Dense(const std::vector<Rational>& prices) {
  PriceVector p(static_cast<int>(prices.size()), Rational::Infinity());
  p.overrides_.reserve(prices.size());
  for (size_t i = 0; i < prices.size(); ++i) {
    CheckPrice(prices[i]);
    if (!prices[i].is_infinite()) {
      p.overrides_.emplace_back(static_cast<int>(i), prices[i]);
    }
  }
  return p;
}

const Rational& PriceVector::operator[](int item) const {
  if (item < 0 || item >= num_items_) {
    throw StructuralError("price index out of range");
  }
  auto it = std::lower_bound(
      overrides_.begin(), overrides_.end(), item,
      [](const std::pair<int, Rational>& e, int i) { return e.first < i; });
  if (it != overrides_.end() && it->first == item) return it->second;
  return fill_;
}

void PriceVector::Set(int item, const Rational& price) {
  if (item < 0 || item >= num_items_) {
    throw StructuralError("price index out of range");
  }
  CheckPrice(price);
  auto it = std::lower_bound(
      overrides_.begin(), overrides_.end(), item,
      [](const std::pair<int, Rational>& e, int i) { return e.first < i; });
  if (it != overrides_.end() && it->first == item) {
    it->second = price;
  } else {
    overrides_.insert(it, {item, price});
  }
}

void PriceVector::SetOn(const ItemSet& items, const Rational& price) {
  if (items.num_items() != num_items_) {
    throw StructuralError("price vector / item set capacity mismatch");
  }
  CheckPrice(price);
  std::vector<std::pair<int, Rational>> merged;
  merged.reserve(overrides_.size() + items.size());
  auto it = overrides_.begin();
  for (int item : items) {
    while (it != overrides_.end() && it->first < item) merged.push_back(*it++);
    if (it != overrides_.end() && it->first == item) ++it;
    merged.emplace_back(item, price);
  }
  merged.insert(merged.end(), it, overrides_.end());
  overrides_ = std::move(merged);
}

Rational PriceVector::PriceOf(const ItemSet& s) const {
  if (s.num_items() != num_items_) {
    throw StructuralError("price vector / item set capacity mismatch");
  }
  Rational total;
  for (int item : s) {
    const Rational& p = (*this)[item];
    if (p.is_infinite()) return Rational::Infinity();
    total += p;
  }
  return total;
}

ItemSet PriceVector::FiniteItems() const {
  ItemSet out(num_items_);
  ForEachFinite([&out](int item, const Rational&) { out.Insert(item); });
  return out;
}

std::vector<Rational> PriceVector::ToDense() const {
  std::vector<Rational> out(num_items_, fill_);
  for (const auto& [item, price] : overrides_) out[item] = price;
  return out;
}

bool operator==(const PriceVector& a, const PriceVector& b) {
  return a.ToDense() == b.ToDense();
}

}  // namespace primcx
