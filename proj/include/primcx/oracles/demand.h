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

#ifndef PRIMCX_ORACLES_DEMAND_H_
#define PRIMCX_ORACLES_DEMAND_H_

#include <optional>
#include <vector>

#include "primcx/core/item_set.h"
#include "primcx/core/price_vector.h"
#include "primcx/core/rng.h"
#include "primcx/core/tie_policy.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

// Largest ground set for which the demanded family is enumerated.
inline constexpr int kMaxEnumerableItems = 20;

// Tie policy plus the random stream SeededRandom draws from. One per oracle.
class TieResolver {
 public:
  explicit TieResolver(TiePolicy policy);

  const TiePolicy& policy() const { return policy_; }
  Rng& rng() { return rng_; }

  // Applies the policy to an enumerated family (colex order). Throws
  // InvariantViolation if an adversarial callback answers outside it.
  ItemSet Choose(const std::vector<ItemSet>& family, const PriceVector& prices);

 private:
  TiePolicy policy_;
  Rng rng_;
};

// v(s) - p(s), or nullopt when s contains an item priced at infinity.
std::optional<Rational> Profit(const Valuation& v, const ItemSet& s,
                               const PriceVector& prices);

struct DemandFamily {
  std::vector<ItemSet> sets;  // Colex order.
  Rational max_profit;
};

// Every profit-maximizing set, by exhaustive scan over subsets of the
// finitely priced items. Needs m <= kMaxEnumerableItems.
DemandFamily EnumerateDemand(const Valuation& v, const PriceVector& prices);

// A demanded set for v at `prices`, chosen per `ties`:
//   additive  items with v_i > p_i, plus ties per policy;
//   wmr       matroid greedy on gains w_a - p_a > 0, then zero-gain items
//             per policy;
//   other     exhaustive argmax.
// Adversarial policies always go through the enumerated family.
ItemSet ComputeDemand(const Valuation& v, const PriceVector& prices,
                      TieResolver& ties);

}  // namespace primcx

#endif  // PRIMCX_ORACLES_DEMAND_H_
