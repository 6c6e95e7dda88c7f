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

#ifndef PRIMCX_MENUS_DISTRIBUTION_H_
#define PRIMCX_MENUS_DISTRIBUTION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "json.hpp"
#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

struct SupportPoint {
  std::shared_ptr<const Valuation> valuation;
  Rational prob;
};

using ValuationGenerator =
    std::function<std::shared_ptr<const Valuation>(Rng& rng)>;

// A distribution over valuations on a fixed item count: either a finite
// support with exact probabilities summing to 1, or a seeded generator with
// a sample budget for Monte Carlo estimates. Immutable once built.
class ValuationDistribution {
 public:
  // Throws DomainError unless probabilities are positive, sum to exactly 1,
  // and every valuation has the same item count.
  static ValuationDistribution FromSupport(std::vector<SupportPoint> support);
  // Sample i is generator(Rng(seed).Fork(i)), i = 0..sample_budget-1.
  static ValuationDistribution FromGenerator(int num_items,
                                             ValuationGenerator generator,
                                             uint64_t seed,
                                             int64_t sample_budget);

  int num_items() const { return num_items_; }
  bool is_finite() const { return !generator_; }
  // Throw DomainError on a generator distribution.
  const std::vector<SupportPoint>& support() const;

  uint64_t seed() const { return seed_; }
  int64_t sample_budget() const { return sample_budget_; }
  // Throws DomainError on a finite distribution.
  std::shared_ptr<const Valuation> Sample(int64_t index) const;

 private:
  ValuationDistribution() = default;

  int num_items_ = 0;
  std::vector<SupportPoint> support_;
  ValuationGenerator generator_;
  uint64_t seed_ = 0;
  int64_t sample_budget_ = 0;
};

// {"support":[{"valuation":{...},"prob":"1/3"},...]}. Finite support only.
// Throws ParseError.
nlohmann::json DistributionToJson(const ValuationDistribution& dist);
ValuationDistribution DistributionFromJson(const nlohmann::json& j);

}  // namespace primcx

#endif  // PRIMCX_MENUS_DISTRIBUTION_H_
