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

#ifndef PRIMCX_KOPT_THRESHOLD_SAMPLING_H_
#define PRIMCX_KOPT_THRESHOLD_SAMPLING_H_

#include <optional>

#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/oracles/oracle.h"

namespace primcx {

struct SampledItem {
  int item;
  Rational value;  // v({item})
};

// Loop guard shared by the algorithms: 64 * ceil(log2 m), at least 64.
int IterationCap(int num_items);

// A uniformly random item j of n with v({j}) > t, or nullopt if there is
// none. Needs v subadditive on n.
//
// One demand query at price t on n (infinity elsewhere) decides emptiness;
// then n is shuffled and halved repeatedly, each half tested by its own
// demand query, keeping a random surviving half until one item is left.
// When the caller already knows the answer is non-empty, pass
// known_nonempty to skip the first query.
std::optional<SampledItem> SampleAboveThreshold(QueryOracle& oracle,
                                                const Rational& t,
                                                const ItemSet& n, Rng& rng,
                                                bool known_nonempty = false);

// A uniformly random item j of n with v({j}) < t, or nullopt. Needs an
// additive oracle. Runs SampleAboveThreshold on the reflected valuation
// W - v_j at threshold W - t, where W = max(v(n), t) + 1. v(n) costs one
// value query unless supplied.
std::optional<SampledItem> SampleBelowThreshold(
    QueryOracle& oracle, const Rational& t, const ItemSet& n, Rng& rng,
    bool known_nonempty = false,
    std::optional<Rational> known_set_value = std::nullopt);

}  // namespace primcx

#endif  // PRIMCX_KOPT_THRESHOLD_SAMPLING_H_
