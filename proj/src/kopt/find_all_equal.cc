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

#include "primcx/kopt/find_all_equal.h"

#include "primcx/core/errors.h"
#include "primcx/core/price_vector.h"
#include "primcx/kopt/threshold_sampling.h"

namespace primcx {
namespace {

void RequireAdditive(const QueryOracle& oracle, const char* what) {
  if (oracle.kind() != ValuationKind::kAdditive) {
    throw CapabilityError(std::string(what) + " needs an additive valuation");
  }
}

bool AllAt(const Rational& set_value, const ItemSet& s, const Rational& t) {
  return set_value == t * Rational(s.size());
}

}  // namespace

UpperSplit SplitAtLeast(QueryOracle& oracle, const Rational& t,
                        const ItemSet& candidates,
                        const Rational& candidates_value, Rng& rng) {
  ItemSet rest = candidates;
  Rational rest_value = candidates_value;
  ItemSet above(oracle.num_items());
  const int cap = IterationCap(oracle.num_items());
  for (int round = 0; !AllAt(rest_value, rest, t); ++round) {
    if (round >= cap) {
      throw IterationLimitError("SplitAtLeast exceeded " +
                                std::to_string(cap) + " rounds");
    }
    std::optional<SampledItem> q =
        SampleAboveThreshold(oracle, t, rest, rng, /*known_nonempty=*/true);
    Rational price = (q->value + t) / Rational(2);
    DemandResult stripped = oracle.Demand(PriceVector::UniformOn(rest, price));
    if (!stripped.set.Contains(q->item)) {
      throw InvariantViolation("demand above the midpoint missed the sample");
    }
    above |= stripped.set;
    rest -= stripped.set;
    rest_value -= stripped.value;
  }
  return {std::move(rest), std::move(above)};
}

LowerSplit SplitAtMost(QueryOracle& oracle, const Rational& t,
                       const ItemSet& candidates, Rng& rng) {
  RequireAdditive(oracle, "SplitAtMost");
  ItemSet rest = candidates;
  ItemSet below(oracle.num_items());
  if (rest.empty()) return {std::move(rest), std::move(below)};
  Rational rest_value = oracle.Value(rest);
  const int cap = IterationCap(oracle.num_items());
  for (int round = 0; !AllAt(rest_value, rest, t); ++round) {
    if (round >= cap) {
      throw IterationLimitError("SplitAtMost exceeded " +
                                std::to_string(cap) + " rounds");
    }
    std::optional<SampledItem> q = SampleBelowThreshold(
        oracle, t, rest, rng, /*known_nonempty=*/true, rest_value);
    Rational price = (q->value + t) / Rational(2);
    DemandResult kept = oracle.Demand(PriceVector::UniformOn(rest, price));
    if (kept.set.Contains(q->item)) {
      throw InvariantViolation("demand above the midpoint kept the sample");
    }
    below |= rest - kept.set;
    rest = std::move(kept.set);
    rest_value = std::move(kept.value);
  }
  return {std::move(rest), std::move(below)};
}

ValuePartition PartitionByValue(QueryOracle& oracle, const Rational& t,
                                const ItemSet& n, Rng& rng) {
  RequireAdditive(oracle, "PartitionByValue");
  DemandResult upper = oracle.Demand(PriceVector::UniformOn(n, t));
  UpperSplit high = SplitAtLeast(oracle, t, upper.set, upper.value, rng);
  LowerSplit low = SplitAtMost(oracle, t, n - upper.set, rng);
  return {std::move(high.above), high.equal | low.equal, std::move(low.below)};
}

ItemSet FindAllEqual(QueryOracle& oracle, const Rational& t, const ItemSet& n,
                     Rng& rng) {
  return PartitionByValue(oracle, t, n, rng).equal;
}

ItemSet FindAllEqual(QueryOracle& oracle, const Rational& t, Rng& rng) {
  return FindAllEqual(oracle, t, ItemSet::Full(oracle.num_items()), rng);
}

}  // namespace primcx
