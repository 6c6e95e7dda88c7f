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

#include "primcx/kopt/threshold_sampling.h"

#include <algorithm>
#include <bit>
#include <vector>

#include "primcx/core/errors.h"
#include "primcx/core/price_vector.h"
#include "primcx/oracles/adapters.h"

namespace primcx {
namespace {

// A demand answer at uniform price t reveals an item above t iff it has
// positive profit.
bool HasItemAbove(const DemandResult& d, const Rational& t) {
  return !d.set.empty() && d.value != t * Rational(d.set.size());
}

}  // namespace

int IterationCap(int num_items) {
  int log2m = num_items <= 1 ? 1 : std::bit_width(static_cast<unsigned>(num_items - 1));
  return 64 * std::max(1, log2m);
}

std::optional<SampledItem> SampleAboveThreshold(QueryOracle& oracle,
                                                const Rational& t,
                                                const ItemSet& n, Rng& rng,
                                                bool known_nonempty) {
  std::optional<Rational> singleton_value;
  if (!known_nonempty) {
    if (n.empty()) return std::nullopt;
    DemandResult d = oracle.Demand(PriceVector::UniformOn(n, t));
    if (!HasItemAbove(d, t)) return std::nullopt;
    if (d.set.size() == 1 && n.size() == 1) singleton_value = d.value;
  }
  std::vector<int> candidates = n.ToVector();
  if (candidates.empty()) {
    throw InvariantViolation("threshold sample over an empty set");
  }
  const int cap = IterationCap(oracle.num_items());
  for (int round = 0; candidates.size() > 1; ++round) {
    if (round >= cap) {
      throw IterationLimitError("SampleAboveThreshold exceeded " +
                                std::to_string(cap) + " halvings");
    }
    rng.Shuffle(candidates);
    const size_t half = candidates.size() / 2;
    std::vector<int> parts[2] = {
        std::vector<int>(candidates.begin(), candidates.begin() + half),
        std::vector<int>(candidates.begin() + half, candidates.end())};
    DemandResult answers[2];
    bool alive[2];
    for (int i = 0; i < 2; ++i) {
      std::sort(parts[i].begin(), parts[i].end());
      answers[i] = oracle.Demand(PriceVector::UniformOn(
          ItemSet::FromItems(oracle.num_items(), parts[i]), t));
      alive[i] = HasItemAbove(answers[i], t);
    }
    int pick;
    if (alive[0] && alive[1]) {
      pick = rng.Coin() ? 1 : 0;
    } else if (alive[0] || alive[1]) {
      pick = alive[0] ? 0 : 1;
    } else {
      throw InvariantViolation(
          "both halves lost every item above the threshold; the valuation "
          "is not subadditive on the candidates");
    }
    candidates = std::move(parts[pick]);
    singleton_value.reset();
    if (candidates.size() == 1) singleton_value = answers[pick].value;
  }
  const int item = candidates.front();
  if (!singleton_value) {
    ItemSet single(oracle.num_items());
    single.Insert(item);
    singleton_value = oracle.Value(single);
  }
  if (*singleton_value <= t) {
    throw InvariantViolation("sampled item is not above the threshold");
  }
  return SampledItem{item, *singleton_value};
}

std::optional<SampledItem> SampleBelowThreshold(
    QueryOracle& oracle, const Rational& t, const ItemSet& n, Rng& rng,
    bool known_nonempty, std::optional<Rational> known_set_value) {
  if (oracle.kind() != ValuationKind::kAdditive) {
    throw CapabilityError("sampling below a threshold needs an additive "
                          "valuation");
  }
  if (n.empty()) {
    if (known_nonempty) {
      throw InvariantViolation("threshold sample over an empty set");
    }
    return std::nullopt;
  }
  Rational set_value =
      known_set_value ? std::move(*known_set_value) : oracle.Value(n);
  Rational ceiling = Max(set_value, t) + Rational(1);
  ReflectedOracle reflected(oracle, ceiling);
  std::optional<SampledItem> sample = SampleAboveThreshold(
      reflected, ceiling - t, n, rng, known_nonempty);
  if (sample) sample->value = ceiling - sample->value;
  return sample;
}

}  // namespace primcx
