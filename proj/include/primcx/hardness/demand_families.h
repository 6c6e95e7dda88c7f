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

#ifndef PRIMCX_HARDNESS_DEMAND_FAMILIES_H_
#define PRIMCX_HARDNESS_DEMAND_FAMILIES_H_

#include <cstdint>
#include <map>
#include <vector>

#include "primcx/core/price_vector.h"
#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/valuations/hard_submodular.h"

namespace primcx {

// Set order used for "cheapest" throughout: total price ascending, then
// the sorted index sequences compared lexicographically.
bool CheaperSet(uint32_t a, uint32_t b, const std::vector<Rational>& prices);

// The d-sets in that order.
std::vector<uint32_t> SetsByPrice(int m, int d,
                                  const std::vector<Rational>& prices);

// Candidate families per size d = 0..m for finite prices:
//   d = k+1: the cheapest (k+1)-sets up to and including the first member
//            of B (all of them if B has none);
//   d = k-1: the same up to the first member of R;
//   d = k:   the cheapest k-set, every k-subset of a (k+1) candidate and
//            every k-superset of a (k-1) candidate;
//   else:    the cheapest d-set.
// Each family is listed in the set order above.
std::map<int, std::vector<uint32_t>> CandidateFamilies(
    const HardSubmodularValuation& v, const PriceVector& prices);

// Whether every demanded set of v at `prices` lies in the size-k candidate
// family, whenever all demanded sets have size k (vacuously true
// otherwise). Exhaustive over all 2^m sets.
struct SizeKCheck {
  bool premise = false;  // Every demanded set has size k.
  bool holds = true;
};
SizeKCheck CheckSizeKClaim(const HardSubmodularValuation& v,
                           const PriceVector& prices);

// True if G is the only maximum-value k-set (exhaustive).
bool GIsUniqueKOptimal(const HardSubmodularValuation& v);

// Baselines that look for G with value queries only.
// The greedy k-set by largest marginal value.
bool GreedyFindsG(const HardSubmodularValuation& v);
// Value queries on `budget` distinct uniform k-sets; true if one is G.
bool RandomProbeFindsG(const HardSubmodularValuation& v, int64_t budget,
                       Rng& rng);

}  // namespace primcx

#endif  // PRIMCX_HARDNESS_DEMAND_FAMILIES_H_
