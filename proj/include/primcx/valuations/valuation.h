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

#ifndef PRIMCX_VALUATIONS_VALUATION_H_
#define PRIMCX_VALUATIONS_VALUATION_H_

#include <string>
#include <vector>

#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"

namespace primcx {

enum class ValuationKind {
  kAdditive,
  kWeightedMatroidRank,
  kHardSubmodular,
  kGeneral,
};

std::string KindName(ValuationKind kind);

// Normalized monotone set function over {0, ..., m-1}. Implementations are
// immutable after construction and safe to share across threads.
class Valuation {
 public:
  virtual ~Valuation() = default;

  virtual int num_items() const = 0;
  virtual ValuationKind kind() const = 0;
  virtual Rational Value(const ItemSet& s) const = 0;

  Rational SingletonValue(int item) const;
};

class AdditiveValuation : public Valuation {
 public:
  explicit AdditiveValuation(std::vector<Rational> values);

  int num_items() const override { return static_cast<int>(values_.size()); }
  ValuationKind kind() const override { return ValuationKind::kAdditive; }
  Rational Value(const ItemSet& s) const override;

  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(int item) const { return values_[item]; }

 private:
  std::vector<Rational> values_;
};

// Throws DomainError unless x is finite and non-negative.
void CheckValuationValue(const Rational& x);

}  // namespace primcx

#endif  // PRIMCX_VALUATIONS_VALUATION_H_
