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

#include "primcx/oracles/adapters.h"

#include "primcx/core/errors.h"

namespace primcx {

MarginalOracle::MarginalOracle(QueryOracle& base, ItemSet conditioned,
                               std::optional<Rational> conditioned_value)
    : base_(base),
      conditioned_(std::move(conditioned)),
      conditioned_value_(std::move(conditioned_value)) {
  if (conditioned_.num_items() != base_.num_items()) {
    throw StructuralError("conditioning set does not match oracle");
  }
}

ValuationKind MarginalOracle::kind() const {
  ValuationKind k = base_.kind();
  if (k == ValuationKind::kAdditive ||
      k == ValuationKind::kWeightedMatroidRank) {
    return k;
  }
  return ValuationKind::kGeneral;
}

const Rational& MarginalOracle::ConditionedValue() {
  if (!conditioned_value_) conditioned_value_ = base_.Value(conditioned_);
  return *conditioned_value_;
}

Rational MarginalOracle::Value(const ItemSet& s) {
  Rational joint = base_.Value(s | conditioned_);
  return joint - ConditionedValue();
}

DemandResult MarginalOracle::Demand(const PriceVector& prices) {
  PriceVector shifted = prices;
  shifted.SetOn(conditioned_, Rational(0));
  DemandResult base = base_.Demand(shifted);
  ItemSet answer = base.set - conditioned_;
  Rational joint = conditioned_.IsSubsetOf(base.set)
                       ? std::move(base.value)
                       : base_.Value(base.set | conditioned_);
  return {std::move(answer), joint - ConditionedValue()};
}

RestrictedOracle::RestrictedOracle(QueryOracle& base, ItemSet support,
                                   ValuationKind kind)
    : base_(base), support_(std::move(support)), kind_(kind) {
  if (support_.num_items() != base_.num_items()) {
    throw StructuralError("support does not match oracle");
  }
}

Rational RestrictedOracle::Value(const ItemSet& s) {
  return base_.Value(s & support_);
}

DemandResult RestrictedOracle::Demand(const PriceVector& prices) {
  PriceVector inside(num_items(), Rational::Infinity());
  prices.ForEachFinite([&](int item, const Rational& p) {
    if (support_.Contains(item)) inside.Set(item, p);
  });
  return base_.Demand(inside);
}

ReflectedOracle::ReflectedOracle(QueryOracle& base, Rational ceiling)
    : base_(base), ceiling_(std::move(ceiling)) {
  if (base_.kind() != ValuationKind::kAdditive) {
    throw CapabilityError("reflection needs an additive valuation");
  }
}

Rational ReflectedOracle::Value(const ItemSet& s) {
  return Rational(s.size()) * ceiling_ - base_.Value(s);
}

DemandResult ReflectedOracle::Demand(const PriceVector& prices) {
  PriceVector mirrored(num_items(), Rational::Infinity());
  ItemSet eligible(num_items());
  prices.ForEachFinite([&](int item, const Rational& p) {
    if (p <= ceiling_) {
      mirrored.Set(item, ceiling_ - p);
      eligible.Insert(item);
    }
  });
  DemandResult base = base_.Demand(mirrored);
  ItemSet answer = eligible - base.set;
  Rational value = Value(answer);
  return {std::move(answer), std::move(value)};
}

Rational PrimitiveOracle::Value(const ItemSet& s) {
  return base_.SellingSeparately(PriceVector::UniformOn(s, Rational(0))).value;
}

DemandResult PrimitiveOracle::Demand(const PriceVector& prices) {
  return base_.SellingSeparately(prices);
}

}  // namespace primcx
