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

#ifndef PRIMCX_MENUS_REVENUE_H_
#define PRIMCX_MENUS_REVENUE_H_

#include <cstdint>
#include <vector>

#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"
#include "primcx/menus/distribution.h"
#include "primcx/menus/menu.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

// How the buyer breaks profit ties between menu options. kSellerWorst
// takes the lowest payment (the empty bundle wins any tie at profit 0),
// which is the conservative choice for revenue guarantees.
enum class MenuTie { kSellerWorst, kSellerBest };

struct BuyerOutcome {
  int size = 0;  // 0 when nothing is bought.
  ItemSet set;
  Rational payment;
  Rational profit;
};

// profile[k] = max value over k-subsets, k = 0..m. Exact for every class:
// sorted prefix sums for additive, greedy-basis prefixes for matroid rank,
// exhaustive search otherwise (m <= 20).
std::vector<Rational> ValueProfile(const Valuation& v);

// A maximum-value k-subset: highest values first (lowest index on ties) for
// additive, a prefix of the greedy basis padded with the lowest-index
// remaining items for matroid rank, the lexicographically first maximum
// otherwise.
ItemSet BestBundleOfSize(const Valuation& v, int k);

// Index into menu.entries() of the option a buyer with this value profile
// takes, or -1 for the empty bundle. Entries larger than the item count
// are unavailable.
int ChooseEntry(const BundleSizeMenu& menu, const std::vector<Rational>& profile,
                MenuTie tie = MenuTie::kSellerWorst);

BuyerOutcome BuyerChoice(const BundleSizeMenu& menu, const Valuation& v,
                         MenuTie tie = MenuTie::kSellerWorst);
Rational Revenue(const BundleSizeMenu& menu, const Valuation& v,
                 MenuTie tie = MenuTie::kSellerWorst);

// Value profiles of every support point of a finite distribution.
std::vector<std::vector<Rational>> SupportProfiles(
    const ValuationDistribution& dist);

// Exact expectation over a finite support. The overloads taking profiles
// skip recomputing them.
Rational ExpectedRevenue(const BundleSizeMenu& menu,
                         const ValuationDistribution& dist,
                         MenuTie tie = MenuTie::kSellerWorst);
Rational ExpectedRevenue(const BundleSizeMenu& menu,
                         const ValuationDistribution& dist,
                         const std::vector<std::vector<Rational>>& profiles,
                         MenuTie tie = MenuTie::kSellerWorst);

// contribution[i] = E[payment; buyer takes entries()[i]].
std::vector<Rational> RevenueByEntry(
    const BundleSizeMenu& menu, const ValuationDistribution& dist,
    const std::vector<std::vector<Rational>>& profiles,
    MenuTie tie = MenuTie::kSellerWorst);

struct RevenueEstimate {
  Rational mean;
  int64_t samples = 0;
};

// Average revenue over the sample budget of a generator distribution.
RevenueEstimate MonteCarloRevenue(const BundleSizeMenu& menu,
                                  const ValuationDistribution& dist,
                                  MenuTie tie = MenuTie::kSellerWorst);

}  // namespace primcx

#endif  // PRIMCX_MENUS_REVENUE_H_
