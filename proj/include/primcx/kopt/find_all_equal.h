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

#ifndef PRIMCX_KOPT_FIND_ALL_EQUAL_H_
#define PRIMCX_KOPT_FIND_ALL_EQUAL_H_

#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/oracles/oracle.h"

namespace primcx {

// Items of a candidate set split by comparison with a threshold t.
struct ValuePartition {
  ItemSet above;
  ItemSet equal;
  ItemSet below;
};

struct UpperSplit {
  ItemSet equal;
  ItemSet above;
};

struct LowerSplit {
  ItemSet equal;
  ItemSet below;
};

// Every member of `candidates` has value >= t and v(candidates) is known.
// Repeatedly samples an item of value q > t and strips, with one demand
// query at (q + t) / 2, every item worth more than that price, until the
// remaining set is worth exactly t per item.
UpperSplit SplitAtLeast(QueryOracle& oracle, const Rational& t,
                        const ItemSet& candidates,
                        const Rational& candidates_value, Rng& rng);

// Every member of `candidates` has value <= t. The mirror image of
// SplitAtLeast: samples an item of value q < t and keeps the demand answer
// at (q + t) / 2. Needs an additive oracle; costs one extra value query
// for v(candidates).
LowerSplit SplitAtMost(QueryOracle& oracle, const Rational& t,
                       const ItemSet& candidates, Rng& rng);

// Classifies n against t with one uniform demand query at t followed by
// SplitAtLeast on the answer and SplitAtMost on the rest. Additive only.
ValuePartition PartitionByValue(QueryOracle& oracle, const Rational& t,
                                const ItemSet& n, Rng& rng);

// Exactly the items of n with value t, whatever the tie policy.
ItemSet FindAllEqual(QueryOracle& oracle, const Rational& t, const ItemSet& n,
                     Rng& rng);
ItemSet FindAllEqual(QueryOracle& oracle, const Rational& t, Rng& rng);

}  // namespace primcx

#endif  // PRIMCX_KOPT_FIND_ALL_EQUAL_H_
