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

#ifndef PRIMCX_KOPT_K_OPTIMAL_H_
#define PRIMCX_KOPT_K_OPTIMAL_H_

#include <vector>

#include "primcx/core/item_set.h"
#include "primcx/core/query_ledger.h"
#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/oracles/oracle.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

struct KOptResult {
  ItemSet set;
  Rational value;
  // Queries spent by this call.
  QueryLedger ledger_snapshot;
};

// A maximum-value k-subset of `candidates` for an additive oracle.
//
// Quickselect over values: a uniform pivot from the surviving candidates S
// is priced with one value query, S is partitioned into items above, equal
// to, and below the pivot value, and the search either recurses into the
// upper part, finishes by filling from the equal part (lowest indices
// first), or commits the upper and equal parts and recurses into the lower
// part. Correct for every tie policy.
KOptResult KOptimalAdditive(QueryOracle& oracle, int k, Rng& rng);
KOptResult KOptimalAdditive(QueryOracle& oracle, int k,
                            const ItemSet& candidates, Rng& rng);

struct IndependentSet {
  ItemSet set;
  Rational value;
};

// A maximum-weight independent set R (v(R) = v(M)) of a matroid rank
// valuation. Grows R by sampling an item with positive marginal value r
// and taking the demand answer at price v(r|R)/2 outside R and 0 on R.
IndependentSet MaxWeightIndependentSet(QueryOracle& oracle, Rng& rng);

// k-optimal set for a matroid rank (or additive) oracle: k-optimal inside
// a maximum-weight independent set, padded with the lowest-index outside
// items when k exceeds its size.
KOptResult KOptimalWmr(QueryOracle& oracle, int k, Rng& rng);
// The same, reusing a known maximum-weight independent set.
KOptResult KOptimalWithinBasis(QueryOracle& oracle, const IndependentSet& basis,
                               int k, Rng& rng);

// Greedy by largest marginal value, value queries only, lowest index on
// ties. prefixes[j] is the greedy set of size j for j = 0..k_max.
std::vector<KOptResult> GreedyPrefixes(QueryOracle& oracle, int k_max);
KOptResult GreedyKOptimal(QueryOracle& oracle, int k);

// Exhaustive scan over the k-subsets in lexicographic order, keeping the
// first maximum. Needs m <= 20.
KOptResult BruteForceKOptimal(const Valuation& v, int k);

// best[j] = max value over j-subsets, j = 0..m, from one pass over all
// subsets. Needs m <= 20.
std::vector<Rational> BruteForceValueProfile(const Valuation& v);

}  // namespace primcx

#endif  // PRIMCX_KOPT_K_OPTIMAL_H_
