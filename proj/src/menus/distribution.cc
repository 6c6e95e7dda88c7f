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

#include "primcx/menus/distribution.h"

#include <string>
#include <utility>

#include "primcx/core/errors.h"
#include "primcx/valuations/valuation_io.h"

namespace primcx {

ValuationDistribution ValuationDistribution::FromSupport(
    std::vector<SupportPoint> support) {
  if (support.empty()) throw DomainError("distribution support is empty");
  ValuationDistribution dist;
  dist.num_items_ = support.front().valuation->num_items();
  Rational total(0);
  for (const SupportPoint& point : support) {
    if (!point.valuation) throw DomainError("null valuation in support");
    if (point.valuation->num_items() != dist.num_items_) {
      throw DomainError("support valuations disagree on the item count");
    }
    if (point.prob.is_infinite() || point.prob.sign() <= 0) {
      throw DomainError("support probabilities must be positive, got " +
                        point.prob.ToString());
    }
    total += point.prob;
  }
  if (total != Rational(1)) {
    throw DomainError("support probabilities sum to " + total.ToString());
  }
  dist.support_ = std::move(support);
  return dist;
}

ValuationDistribution ValuationDistribution::FromGenerator(
    int num_items, ValuationGenerator generator, uint64_t seed,
    int64_t sample_budget) {
  if (!generator) throw DomainError("null valuation generator");
  if (sample_budget <= 0) throw DomainError("sample budget must be positive");
  ValuationDistribution dist;
  dist.num_items_ = num_items;
  dist.generator_ = std::move(generator);
  dist.seed_ = seed;
  dist.sample_budget_ = sample_budget;
  return dist;
}

const std::vector<SupportPoint>& ValuationDistribution::support() const {
  if (!is_finite()) throw DomainError("generator distribution has no support");
  return support_;
}

std::shared_ptr<const Valuation> ValuationDistribution::Sample(
    int64_t index) const {
  if (is_finite()) throw DomainError("finite distribution is not sampled");
  Rng rng = Rng(seed_).Fork(static_cast<uint64_t>(index));
  std::shared_ptr<const Valuation> v = generator_(rng);
  if (!v || v->num_items() != num_items_) {
    throw DomainError("generator produced a valuation of the wrong size");
  }
  return v;
}

nlohmann::json DistributionToJson(const ValuationDistribution& dist) {
  nlohmann::json support = nlohmann::json::array();
  for (const SupportPoint& point : dist.support()) {
    support.push_back({{"valuation", ValuationToJson(*point.valuation)},
                       {"prob", RationalToJson(point.prob)}});
  }
  return {{"support", support}};
}

ValuationDistribution DistributionFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("support") || !j["support"].is_array()) {
    throw ParseError("distribution needs a 'support' array");
  }
  std::vector<SupportPoint> support;
  for (const nlohmann::json& point : j["support"]) {
    if (!point.is_object() || !point.contains("valuation") ||
        !point.contains("prob")) {
      throw ParseError("support point needs 'valuation' and 'prob'");
    }
    support.push_back({ValuationFromJson(point["valuation"]),
                       RationalFromJson(point["prob"])});
  }
  try {
    return ValuationDistribution::FromSupport(std::move(support));
  } catch (const DomainError& error) {
    throw ParseError(error.what());
  }
}

}  // namespace primcx
