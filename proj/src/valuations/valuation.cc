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

#include "primcx/valuations/valuation.h"

#include "primcx/core/errors.h"

namespace primcx {

std::string KindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kAdditive:
      return "additive";
    case ValuationKind::kWeightedMatroidRank:
      return "wmr";
    case ValuationKind::kHardSubmodular:
      return "hardsub";
    case ValuationKind::kGeneral:
      return "general";
  }
  return "unknown";
}

void CheckValuationValue(const Rational& x) {
  if (x.is_infinite()) throw DomainError("infinite valuation value");
  if (x.sign() < 0) throw DomainError("negative valuation value " + x.ToString());
}

Rational Valuation::SingletonValue(int item) const {
  ItemSet s(num_items());
  s.Insert(item);
  return Value(s);
}

AdditiveValuation::AdditiveValuation(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.size() > static_cast<size_t>(ItemSet::kMaxItems)) {
    throw StructuralError("too many items");
  }
  for (const Rational& x : values_) CheckValuationValue(x);
}

Rational AdditiveValuation::Value(const ItemSet& s) const {
  if (s.num_items() != num_items()) {
    throw StructuralError("item set does not match valuation");
  }
  Rational total;
  for (int item : s) total += values_[item];
  return total;
}

}  // namespace primcx
