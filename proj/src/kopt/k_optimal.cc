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

#include "primcx/kopt/k_optimal.h"

#include <bit>
#include <string>

#include "primcx/core/errors.h"
#include "primcx/core/price_vector.h"
#include "primcx/kopt/find_all_equal.h"
#include "primcx/kopt/threshold_sampling.h"
#include "primcx/oracles/adapters.h"
#include "primcx/oracles/demand.h"

namespace primcx {
namespace {

void CheckK(int k, int limit) {
  if (k < 0 || k > limit) {
    throw DomainError("k = " + std::to_string(k) + " outside [0, " +
                      std::to_string(limit) + "]");
  }
}

// Adds the `count` lowest-index members of `pool` to `target`.
void FillLowest(ItemSet& target, const ItemSet& pool, int count) {
  for (auto it = pool.begin(); count > 0 && it != pool.end(); ++it, --count) {
    target.Insert(*it);
  }
  if (count > 0) throw InvariantViolation("fill pool too small");
}

}  // namespace

KOptResult KOptimalAdditive(QueryOracle& oracle, int k, Rng& rng) {
  return KOptimalAdditive(oracle, k, ItemSet::Full(oracle.num_items()), rng);
}

KOptResult KOptimalAdditive(QueryOracle& oracle, int k,
                            const ItemSet& candidates, Rng& rng) {
  if (oracle.kind() != ValuationKind::kAdditive) {
    throw CapabilityError("KOptimalAdditive needs an additive valuation");
  }
  CheckK(k, candidates.size());
  const QueryLedger start = oracle.ledger();
  const int m = oracle.num_items();
  ItemSet pool = candidates;
  ItemSet chosen(m);
  const int cap = IterationCap(m);
  for (int round = 0;; ++round) {
    if (round >= cap) {
      throw IterationLimitError("KOptimalAdditive exceeded " +
                                std::to_string(cap) + " rounds");
    }
    const int need = k - chosen.size();
    if (need == 0) break;
    if (need == pool.size()) {
      chosen |= pool;
      break;
    }
    ItemSet pivot(m);
    pivot.Insert(pool.Nth(static_cast<int>(rng.UniformInt(pool.size()))));
    const Rational t = oracle.Value(pivot);

    DemandResult upper = oracle.Demand(PriceVector::UniformOn(pool, t));
    UpperSplit high = SplitAtLeast(oracle, t, upper.set, upper.value, rng);
    const int above = high.above.size();
    if (need < above) {
      pool = std::move(high.above);
      continue;
    }
    LowerSplit low = SplitAtMost(oracle, t, pool - upper.set, rng);
    ItemSet equal = high.equal | low.equal;
    if (need <= above + equal.size()) {
      chosen |= high.above;
      FillLowest(chosen, equal, need - above);
      break;
    }
    chosen |= high.above;
    chosen |= equal;
    pool = std::move(low.below);
  }
  Rational value = chosen.empty() ? Rational(0) : oracle.Value(chosen);
  return {std::move(chosen), std::move(value), oracle.ledger() - start};
}

IndependentSet MaxWeightIndependentSet(QueryOracle& oracle, Rng& rng) {
  const int m = oracle.num_items();
  const ItemSet full = ItemSet::Full(m);
  const Rational total = oracle.Value(full);
  ItemSet basis(m);
  Rational basis_value(0);
  const int cap = IterationCap(m);
  for (int round = 0; basis_value < total; ++round) {
    if (round >= cap) {
      throw IterationLimitError("MaxWeightIndependentSet exceeded " +
                                std::to_string(cap) + " rounds");
    }
    MarginalOracle marginal(oracle, basis, basis_value);
    const ItemSet outside = full - basis;
    std::optional<SampledItem> r = SampleAboveThreshold(
        marginal, Rational(0), outside, rng, /*known_nonempty=*/true);
    DemandResult grown = marginal.Demand(
        PriceVector::UniformOn(outside, r->value / Rational(2)));
    if (grown.set.empty() || grown.value.sign() <= 0) {
      throw InvariantViolation("demand at half the marginal added nothing");
    }
    basis |= grown.set;
    basis_value += grown.value;
  }
  return {std::move(basis), std::move(basis_value)};
}

KOptResult KOptimalWithinBasis(QueryOracle& oracle, const IndependentSet& basis,
                               int k, Rng& rng) {
  const int m = oracle.num_items();
  CheckK(k, m);
  const QueryLedger start = oracle.ledger();
  const int rank = basis.set.size();
  if (k <= rank) {
    RestrictedOracle restricted(oracle, basis.set, ValuationKind::kAdditive);
    KOptResult result = KOptimalAdditive(restricted, k, basis.set, rng);
    result.ledger_snapshot = oracle.ledger() - start;
    return result;
  }
  ItemSet padded = basis.set;
  FillLowest(padded, ItemSet::Full(m) - basis.set, k - rank);
  return {std::move(padded), basis.value, oracle.ledger() - start};
}

KOptResult KOptimalWmr(QueryOracle& oracle, int k, Rng& rng) {
  const ValuationKind kind = oracle.kind();
  if (kind != ValuationKind::kWeightedMatroidRank &&
      kind != ValuationKind::kAdditive) {
    throw CapabilityError("KOptimalWmr needs a matroid rank valuation");
  }
  CheckK(k, oracle.num_items());
  const QueryLedger start = oracle.ledger();
  IndependentSet basis = MaxWeightIndependentSet(oracle, rng);
  KOptResult result = KOptimalWithinBasis(oracle, basis, k, rng);
  result.ledger_snapshot = oracle.ledger() - start;
  return result;
}

std::vector<KOptResult> GreedyPrefixes(QueryOracle& oracle, int k_max) {
  const int m = oracle.num_items();
  CheckK(k_max, m);
  const QueryLedger start = oracle.ledger();
  std::vector<KOptResult> prefixes;
  prefixes.push_back({ItemSet(m), Rational(0), QueryLedger()});
  ItemSet current(m);
  for (int step = 1; step <= k_max; ++step) {
    int best_item = -1;
    Rational best_value;
    for (int item = 0; item < m; ++item) {
      if (current.Contains(item)) continue;
      ItemSet trial = current;
      trial.Insert(item);
      Rational value = oracle.Value(trial);
      if (best_item < 0 || value > best_value) {
        best_item = item;
        best_value = std::move(value);
      }
    }
    current.Insert(best_item);
    prefixes.push_back({current, best_value, oracle.ledger() - start});
  }
  return prefixes;
}

KOptResult GreedyKOptimal(QueryOracle& oracle, int k) {
  return std::move(GreedyPrefixes(oracle, k).back());
}

KOptResult BruteForceKOptimal(const Valuation& v, int k) {
  const int m = v.num_items();
  if (m > kMaxEnumerableItems) {
    throw CapabilityError("brute-force k-optimal needs m <= " +
                          std::to_string(kMaxEnumerableItems));
  }
  CheckK(k, m);
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  ItemSet best_set(m);
  Rational best_value;
  bool have = false;
  while (true) {
    ItemSet s = ItemSet::FromItems(m, combo);
    Rational value = v.Value(s);
    if (!have || value > best_value) {
      best_set = std::move(s);
      best_value = std::move(value);
      have = true;
    }
    int i = k - 1;
    while (i >= 0 && combo[i] == m - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return {std::move(best_set), std::move(best_value), QueryLedger()};
}

std::vector<Rational> BruteForceValueProfile(const Valuation& v) {
  const int m = v.num_items();
  if (m > kMaxEnumerableItems) {
    throw CapabilityError("value profile needs m <= " +
                          std::to_string(kMaxEnumerableItems));
  }
  std::vector<Rational> best(m + 1);
  std::vector<bool> seen(m + 1, false);
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    int size = std::popcount(mask);
    Rational value = v.Value(ItemSet::FromMask(m, mask));
    if (!seen[size] || value > best[size]) {
      best[size] = std::move(value);
      seen[size] = true;
    }
  }
  return best;
}

}  // namespace primcx
