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

#include "primcx/menus/implementation.h"

#include <utility>

#include "primcx/core/errors.h"
#include "primcx/kopt/k_optimal.h"
#include "primcx/menus/rounding.h"

namespace primcx {
namespace {

// Pr[v(M) >= t] over a finite support.
Rational ProbGrandValueAtLeast(const ValuationDistribution& dist,
                               const std::vector<std::vector<Rational>>& profiles,
                               const Rational& t) {
  Rational prob(0);
  for (size_t i = 0; i < profiles.size(); ++i) {
    if (profiles[i].back() >= t) prob += dist.support()[i].prob;
  }
  return prob;
}

std::vector<int> AllSizes(const BundleSizeMenu& menu) {
  std::vector<int> sizes;
  for (const MenuEntry& e : menu.entries()) sizes.push_back(e.size);
  return sizes;
}

// Keeps the candidate if it is strictly more profitable, or equally
// profitable and cheaper.
void Consider(BuyerOutcome& best, int size, ItemSet set, const Rational& value,
              const Rational& price) {
  Rational profit = value - price;
  if (profit > best.profit ||
      (profit == best.profit && price < best.payment)) {
    best.size = size;
    best.set = std::move(set);
    best.payment = price;
    best.profit = std::move(profit);
  }
}

}  // namespace

BundleSizeMenu PruneLowRevenue(const BundleSizeMenu& menu,
                               const ValuationDistribution& dist,
                               const Rational& eps) {
  if (eps.is_infinite() || eps.sign() <= 0) {
    throw DomainError("pruning needs eps > 0");
  }
  std::vector<std::vector<Rational>> profiles = SupportProfiles(dist);
  std::vector<Rational> contribution =
      RevenueByEntry(menu, dist, profiles, MenuTie::kSellerWorst);
  Rational total(0);
  for (const Rational& c : contribution) total += c;
  if (total.is_zero()) return menu;
  Rational cutoff = eps / Rational(dist.num_items()) * total;
  for (int i = 0; i < menu.num_entries(); ++i) {
    if (contribution[i] >= cutoff) {
      return menu.WithoutSizesBelow(menu.entries()[i].size);
    }
  }
  throw InvariantViolation("no menu entry reaches an eps/m revenue share");
}

BundleSizeMenu MenuImplementation::Offered() const {
  if (kind == Kind::kGrandBundleOnly) {
    return BundleSizeMenu({{num_items, *threshold}});
  }
  return menu;
}

MenuImplementation BuildImplementation(const BundleSizeMenu& menu,
                                       const ValuationDistribution& dist,
                                       const Rational& eps) {
  const int m = dist.num_items();
  if (menu.max_size() > m) throw DomainError("menu size exceeds item count");
  MenuImplementation impl;
  impl.num_items = m;
  impl.eps = eps;
  BundleSizeMenu rounded = RoundMenu(menu, eps).menu;
  if (rounded.empty() || rounded.PriceRatio() <= Rational(m)) {
    impl.kind = MenuImplementation::Kind::kPrunedMenu;
    impl.cheapest_price = rounded.empty() ? Rational(0) : rounded.MinPrice();
    impl.window_sizes = AllSizes(rounded);
    impl.menu = std::move(rounded);
    return impl;
  }
  BundleSizeMenu pruned = PruneLowRevenue(rounded, dist, eps);
  const Rational p = pruned.MinPrice();
  const Rational t = Rational(m).Pow(3) * p / eps;
  impl.threshold = t;
  if (ProbGrandValueAtLeast(dist, SupportProfiles(dist), t) >
      Rational(1) / Rational(m).Pow(2)) {
    impl.kind = MenuImplementation::Kind::kGrandBundleOnly;
    impl.cheapest_price = t;
    return impl;
  }
  impl.kind = MenuImplementation::Kind::kPrunedMenu;
  impl.cheapest_price = p;
  for (const MenuEntry& e : pruned.entries()) {
    if (e.price <= t) impl.window_sizes.push_back(e.size);
  }
  impl.menu = std::move(pruned);
  return impl;
}

Rational ImplementationRevenue(const MenuImplementation& impl,
                               const ValuationDistribution& dist) {
  std::vector<std::vector<Rational>> profiles = SupportProfiles(dist);
  if (impl.kind == MenuImplementation::Kind::kGrandBundleOnly) {
    return *impl.threshold *
           ProbGrandValueAtLeast(dist, profiles, *impl.threshold);
  }
  return ExpectedRevenue(impl.menu, dist, profiles, MenuTie::kSellerWorst);
}

BuyerRun RunBuyer(const MenuImplementation& impl, QueryOracle& oracle,
                  Rng& rng) {
  const int m = oracle.num_items();
  if (m != impl.num_items) throw DomainError("oracle item count mismatch");
  BuyerRun run;
  BuyerOutcome& best = run.outcome;
  best.set = ItemSet(m);
  best.payment = Rational(0);
  best.profit = Rational(0);
  const ItemSet grand = ItemSet::Full(m);
  const Rational grand_value = oracle.Value(grand);

  if (impl.kind == MenuImplementation::Kind::kGrandBundleOnly) {
    run.branch = BuyerBranch::kGrandBundle;
    if (grand_value >= *impl.threshold) {
      best.size = m;
      best.set = grand;
      best.payment = *impl.threshold;
      best.profit = grand_value - *impl.threshold;
    }
    return run;
  }

  if (impl.threshold && grand_value >= *impl.threshold) {
    run.branch = BuyerBranch::kGreedy;
    std::vector<KOptResult> prefixes =
        GreedyPrefixes(oracle, impl.menu.max_size());
    for (const MenuEntry& e : impl.menu.entries()) {
      Consider(best, e.size, prefixes[e.size].set, prefixes[e.size].value,
               e.price);
    }
    return run;
  }

  run.branch = impl.threshold ? BuyerBranch::kWindow : BuyerBranch::kEveryLevel;
  // Every bundle is worth at most v(M), so a size priced at or above it
  // cannot beat the empty bundle.
  std::optional<IndependentSet> basis;
  for (int size : impl.window_sizes) {
    Rational price = *impl.menu.PriceOf(size);
    if (price >= grand_value) continue;
    if (!basis) basis = MaxWeightIndependentSet(oracle, rng);
    KOptResult result = KOptimalWithinBasis(oracle, *basis, size, rng);
    Consider(best, size, std::move(result.set), result.value, price);
  }
  return run;
}

}  // namespace primcx
