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

#include "primcx/menus/revenue.h"

#include <algorithm>
#include <numeric>

#include "primcx/core/errors.h"
#include "primcx/kopt/k_optimal.h"
#include "primcx/valuations/weighted_matroid_rank.h"

namespace primcx {
namespace {

// Items by value descending, index ascending.
std::vector<int> AdditiveOrder(const AdditiveValuation& v) {
  std::vector<int> order(v.num_items());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&v](int a, int b) {
    return v.value(a) > v.value(b);
  });
  return order;
}

// The greedy basis in greedy order.
std::vector<int> BasisOrder(const WeightedMatroidRankValuation& v) {
  ItemSet basis = v.MaxWeightBasis(ItemSet::Full(v.num_items()));
  std::vector<int> order;
  for (int item : v.greedy_order()) {
    if (basis.Contains(item)) order.push_back(item);
  }
  return order;
}

}  // namespace

std::vector<Rational> ValueProfile(const Valuation& v) {
  const int m = v.num_items();
  std::vector<Rational> profile(m + 1, Rational(0));
  if (v.kind() == ValuationKind::kAdditive) {
    const auto& additive = static_cast<const AdditiveValuation&>(v);
    std::vector<int> order = AdditiveOrder(additive);
    for (int k = 1; k <= m; ++k) {
      profile[k] = profile[k - 1] + additive.value(order[k - 1]);
    }
    return profile;
  }
  if (v.kind() == ValuationKind::kWeightedMatroidRank) {
    const auto& wmr = static_cast<const WeightedMatroidRankValuation&>(v);
    std::vector<int> basis = BasisOrder(wmr);
    for (int k = 1; k <= m; ++k) {
      profile[k] = profile[k - 1];
      if (k <= static_cast<int>(basis.size())) {
        profile[k] += wmr.weights()[basis[k - 1]];
      }
    }
    return profile;
  }
  return BruteForceValueProfile(v);
}

ItemSet BestBundleOfSize(const Valuation& v, int k) {
  const int m = v.num_items();
  if (k < 0 || k > m) throw DomainError("bundle size out of range");
  if (v.kind() == ValuationKind::kAdditive) {
    std::vector<int> order =
        AdditiveOrder(static_cast<const AdditiveValuation&>(v));
    order.resize(k);
    return ItemSet::FromItems(m, order);
  }
  if (v.kind() == ValuationKind::kWeightedMatroidRank) {
    std::vector<int> basis =
        BasisOrder(static_cast<const WeightedMatroidRankValuation&>(v));
    ItemSet set(m);
    int count = 0;
    for (; count < k && count < static_cast<int>(basis.size()); ++count) {
      set.Insert(basis[count]);
    }
    for (int item = 0; item < m && count < k; ++item) {
      if (!set.Contains(item)) {
        set.Insert(item);
        ++count;
      }
    }
    return set;
  }
  return BruteForceKOptimal(v, k).set;
}

int ChooseEntry(const BundleSizeMenu& menu, const std::vector<Rational>& profile,
                MenuTie tie) {
  const int m = static_cast<int>(profile.size()) - 1;
  int best = -1;
  Rational best_profit(0);
  const auto& entries = menu.entries();
  for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
    if (entries[i].size > m) break;
    Rational profit = profile[entries[i].size] - entries[i].price;
    // Prices increase along the menu, so a later entry pays more.
    bool take = profit > best_profit ||
                (profit == best_profit && tie == MenuTie::kSellerBest);
    if (take) {
      best = i;
      best_profit = std::move(profit);
    }
  }
  return best;
}

BuyerOutcome BuyerChoice(const BundleSizeMenu& menu, const Valuation& v,
                         MenuTie tie) {
  std::vector<Rational> profile = ValueProfile(v);
  int index = ChooseEntry(menu, profile, tie);
  BuyerOutcome outcome;
  outcome.set = ItemSet(v.num_items());
  outcome.payment = Rational(0);
  outcome.profit = Rational(0);
  if (index < 0) return outcome;
  const MenuEntry& entry = menu.entries()[index];
  outcome.size = entry.size;
  outcome.set = BestBundleOfSize(v, entry.size);
  outcome.payment = entry.price;
  outcome.profit = profile[entry.size] - entry.price;
  return outcome;
}

Rational Revenue(const BundleSizeMenu& menu, const Valuation& v,
                 MenuTie tie) {
  int index = ChooseEntry(menu, ValueProfile(v), tie);
  return index < 0 ? Rational(0) : menu.entries()[index].price;
}

std::vector<std::vector<Rational>> SupportProfiles(
    const ValuationDistribution& dist) {
  std::vector<std::vector<Rational>> profiles;
  for (const SupportPoint& point : dist.support()) {
    profiles.push_back(ValueProfile(*point.valuation));
  }
  return profiles;
}

Rational ExpectedRevenue(const BundleSizeMenu& menu,
                         const ValuationDistribution& dist, MenuTie tie) {
  return ExpectedRevenue(menu, dist, SupportProfiles(dist), tie);
}

Rational ExpectedRevenue(const BundleSizeMenu& menu,
                         const ValuationDistribution& dist,
                         const std::vector<std::vector<Rational>>& profiles,
                         MenuTie tie) {
  Rational total(0);
  for (const Rational& contribution :
       RevenueByEntry(menu, dist, profiles, tie)) {
    total += contribution;
  }
  return total;
}

std::vector<Rational> RevenueByEntry(
    const BundleSizeMenu& menu, const ValuationDistribution& dist,
    const std::vector<std::vector<Rational>>& profiles, MenuTie tie) {
  const auto& support = dist.support();
  if (profiles.size() != support.size()) {
    throw DomainError("one value profile per support point is required");
  }
  std::vector<Rational> contribution(menu.num_entries(), Rational(0));
  for (size_t i = 0; i < support.size(); ++i) {
    int index = ChooseEntry(menu, profiles[i], tie);
    if (index >= 0) {
      contribution[index] += support[i].prob * menu.entries()[index].price;
    }
  }
  return contribution;
}

RevenueEstimate MonteCarloRevenue(const BundleSizeMenu& menu,
                                  const ValuationDistribution& dist,
                                  MenuTie tie) {
  RevenueEstimate estimate;
  Rational total(0);
  for (int64_t i = 0; i < dist.sample_budget(); ++i) {
    total += Revenue(menu, *dist.Sample(i), tie);
  }
  estimate.samples = dist.sample_budget();
  estimate.mean = total / Rational(estimate.samples);
  return estimate;
}

}  // namespace primcx
