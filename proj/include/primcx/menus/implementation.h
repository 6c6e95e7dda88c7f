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

#ifndef PRIMCX_MENUS_IMPLEMENTATION_H_
#define PRIMCX_MENUS_IMPLEMENTATION_H_

#include <optional>
#include <vector>

#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/menus/distribution.h"
#include "primcx/menus/menu.h"
#include "primcx/menus/revenue.h"
#include "primcx/oracles/oracle.h"

namespace primcx {

// Removes every entry smaller than d, the smallest size whose expected
// revenue contribution is at least (eps/m) Rev. Seller-worst ties. Loses
// less than eps Rev. A zero-revenue menu is returned unchanged.
BundleSizeMenu PruneLowRevenue(const BundleSizeMenu& menu,
                               const ValuationDistribution& dist,
                               const Rational& eps);

// What the seller deploys: either the grand bundle alone at price t, or a
// menu whose buyer algorithm branches on v(M) against t (no threshold
// means every level is solved directly).
struct MenuImplementation {
  enum class Kind { kGrandBundleOnly, kPrunedMenu };

  Kind kind = Kind::kPrunedMenu;
  int num_items = 0;
  Rational eps;
  // Cheapest price of the deployed menu (t for the grand bundle).
  Rational cheapest_price;
  std::optional<Rational> threshold;
  // kPrunedMenu: the deployed menu. kGrandBundleOnly: empty.
  BundleSizeMenu menu;
  // kPrunedMenu: sizes with price in [cheapest_price, threshold] (all sizes
  // without a threshold).
  std::vector<int> window_sizes;

  // The menu the buyer faces: {(m, t)} for the grand bundle.
  BundleSizeMenu Offered() const;
};

// Round, then either keep every level (price ratio <= m) or prune and
// compare Pr[v(M) >= t] with 1/m^2 for t = m^3 p / eps, p the cheapest
// pruned price. Finite distributions only.
MenuImplementation BuildImplementation(const BundleSizeMenu& menu,
                                       const ValuationDistribution& dist,
                                       const Rational& eps);

// Expected revenue of the deployed mechanism. The grand-bundle buyer buys
// whenever v(M) >= t; otherwise seller-worst ties.
Rational ImplementationRevenue(const MenuImplementation& impl,
                               const ValuationDistribution& dist);

enum class BuyerBranch {
  kGrandBundle,  // Grand bundle only.
  kEveryLevel,   // No threshold: every level solved directly.
  kGreedy,       // v(M) >= t: greedy prefixes.
  kWindow,       // v(M) < t: window sizes inside one independent set.
};

struct BuyerRun {
  BuyerOutcome outcome;
  BuyerBranch branch = BuyerBranch::kGrandBundle;
};

// The buyer's side, through queries only. One value query for v(M); the
// grand bundle is bought iff v(M) >= t. Otherwise, when v(M) >= t, the
// greedy prefixes give every size at once; below t, one maximum-weight
// independent set is computed and each window size priced below v(M) is
// solved inside it. Returns the most profitable option, lowest payment on
// ties, so it matches BuyerChoice on the offered menu. Needs an additive
// or matroid rank oracle.
BuyerRun RunBuyer(const MenuImplementation& impl, QueryOracle& oracle,
                  Rng& rng);

}  // namespace primcx

#endif  // PRIMCX_MENUS_IMPLEMENTATION_H_
