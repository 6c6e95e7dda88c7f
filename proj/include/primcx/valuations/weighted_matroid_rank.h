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

#ifndef PRIMCX_VALUATIONS_WEIGHTED_MATROID_RANK_H_
#define PRIMCX_VALUATIONS_WEIGHTED_MATROID_RANK_H_

#include <memory>
#include <vector>

#include "primcx/valuations/matroid.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

// v(S) = max weight of an independent subset of S, computed by the matroid
// greedy rule over items ordered by weight descending, index ascending.
class WeightedMatroidRankValuation : public Valuation {
 public:
  WeightedMatroidRankValuation(std::shared_ptr<const Matroid> matroid,
                               std::vector<Rational> weights);

  int num_items() const override { return static_cast<int>(weights_.size()); }
  ValuationKind kind() const override {
    return ValuationKind::kWeightedMatroidRank;
  }
  Rational Value(const ItemSet& s) const override;

  // The independent subset of s that the greedy rule picks. Zero-weight
  // items are skipped.
  ItemSet MaxWeightBasis(const ItemSet& s) const;

  const Matroid& matroid() const { return *matroid_; }
  std::shared_ptr<const Matroid> shared_matroid() const { return matroid_; }
  const std::vector<Rational>& weights() const { return weights_; }
  // All items ordered by weight descending, index ascending.
  const std::vector<int>& greedy_order() const { return order_; }

 private:
  // Members of s with positive weight, in greedy order.
  std::vector<int> GreedyOrder(const ItemSet& s) const;

  std::shared_ptr<const Matroid> matroid_;
  std::vector<Rational> weights_;
  std::vector<int> order_;     // All items, greedy order.
  std::vector<int> position_;  // position_[item] = index in order_.
  int num_positive_ = 0;       // Prefix of order_ with positive weight.
};

}  // namespace primcx

#endif  // PRIMCX_VALUATIONS_WEIGHTED_MATROID_RANK_H_
