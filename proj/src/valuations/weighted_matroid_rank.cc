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

#include "primcx/valuations/weighted_matroid_rank.h"

#include <algorithm>
#include <numeric>

#include "primcx/core/errors.h"

namespace primcx {

WeightedMatroidRankValuation::WeightedMatroidRankValuation(
    std::shared_ptr<const Matroid> matroid, std::vector<Rational> weights)
    : matroid_(std::move(matroid)), weights_(std::move(weights)) {
  if (matroid_ == nullptr) throw StructuralError("null matroid");
  if (matroid_->num_items() != static_cast<int>(weights_.size())) {
    throw StructuralError("weight count does not match matroid");
  }
  for (const Rational& w : weights_) CheckValuationValue(w);
  order_.resize(weights_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
    return weights_[a] > weights_[b];
  });
  position_.resize(weights_.size());
  for (size_t i = 0; i < order_.size(); ++i) {
    position_[order_[i]] = static_cast<int>(i);
    if (weights_[order_[i]].sign() > 0) num_positive_ = static_cast<int>(i) + 1;
  }
}

std::vector<int> WeightedMatroidRankValuation::GreedyOrder(
    const ItemSet& s) const {
  if (s.num_items() != num_items()) {
    throw StructuralError("item set does not match valuation");
  }
  std::vector<int> items;
  int count = s.size();
  if (count * 8 >= num_items()) {
    items.reserve(count);
    for (int i = 0; i < num_positive_; ++i) {
      if (s.Contains(order_[i])) items.push_back(order_[i]);
    }
    return items;
  }
  items.reserve(count);
  for (int item : s) {
    if (position_[item] < num_positive_) items.push_back(item);
  }
  std::sort(items.begin(), items.end(),
            [this](int a, int b) { return position_[a] < position_[b]; });
  return items;
}

Rational WeightedMatroidRankValuation::Value(const ItemSet& s) const {
  std::vector<int> items = GreedyOrder(s);
  std::unique_ptr<Matroid::Builder> builder = matroid_->NewBuilder();
  Rational total;
  for (int item : items) {
    if (builder->CanAdd(item)) {
      builder->Add(item);
      total += weights_[item];
    }
  }
  return total;
}

ItemSet WeightedMatroidRankValuation::MaxWeightBasis(const ItemSet& s) const {
  std::vector<int> items = GreedyOrder(s);
  std::unique_ptr<Matroid::Builder> builder = matroid_->NewBuilder();
  ItemSet basis(num_items());
  for (int item : items) {
    if (builder->CanAdd(item)) {
      builder->Add(item);
      basis.Insert(item);
    }
  }
  return basis;
}

}  // namespace primcx
