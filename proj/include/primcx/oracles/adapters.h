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

#ifndef PRIMCX_ORACLES_ADAPTERS_H_
#define PRIMCX_ORACLES_ADAPTERS_H_

#include <optional>

#include "primcx/oracles/counted_oracle.h"
#include "primcx/oracles/oracle.h"

namespace primcx {

// The marginal valuation v(. | R) = v(. u R) - v(R).
//
// A value query costs one base value query for v(S u R); v(R) is queried
// once and cached, or supplied by the caller. A demand query is one base
// demand query with R priced at zero; if the answer D misses part of R, the
// reported value needs one more base value query for v(D u R).
class MarginalOracle : public QueryOracle {
 public:
  MarginalOracle(QueryOracle& base, ItemSet conditioned,
                 std::optional<Rational> conditioned_value = std::nullopt);

  int num_items() const override { return base_.num_items(); }
  ValuationKind kind() const override;
  Rational Value(const ItemSet& s) override;
  // The answer never contains items of R.
  DemandResult Demand(const PriceVector& prices) override;
  const QueryLedger& ledger() const override { return base_.ledger(); }

 private:
  const Rational& ConditionedValue();

  QueryOracle& base_;
  ItemSet conditioned_;
  std::optional<Rational> conditioned_value_;
};

// The base valuation restricted to a fixed subset R: v'(S) = v(S n R).
// The caller declares the class of the restriction, e.g. additive for a
// matroid rank function restricted to an independent set.
class RestrictedOracle : public QueryOracle {
 public:
  RestrictedOracle(QueryOracle& base, ItemSet support, ValuationKind kind);

  int num_items() const override { return base_.num_items(); }
  ValuationKind kind() const override { return kind_; }
  Rational Value(const ItemSet& s) override;
  DemandResult Demand(const PriceVector& prices) override;
  const QueryLedger& ledger() const override { return base_.ledger(); }

 private:
  QueryOracle& base_;
  ItemSet support_;
  ValuationKind kind_;
};

// For an additive base and W larger than every item value, the additive
// valuation v'_j = W - v_j. Value queries map to |S|W - v(S). A demand
// query at p' becomes a base demand query at W - p' on the items with
// p'_j <= W; the answer is the complement of the base answer within those
// items, and its value costs one more base value query.
class ReflectedOracle : public QueryOracle {
 public:
  ReflectedOracle(QueryOracle& base, Rational ceiling);

  int num_items() const override { return base_.num_items(); }
  ValuationKind kind() const override { return ValuationKind::kAdditive; }
  Rational Value(const ItemSet& s) override;
  DemandResult Demand(const PriceVector& prices) override;
  const QueryLedger& ledger() const override { return base_.ledger(); }

  const Rational& ceiling() const { return ceiling_; }

 private:
  QueryOracle& base_;
  Rational ceiling_;
};

// Routes every query through the selling-separately primitive. A value
// query for S becomes one primitive with price 0 on S and infinity
// elsewhere.
class PrimitiveOracle : public QueryOracle {
 public:
  explicit PrimitiveOracle(CountedOracle& base) : base_(base) {}

  int num_items() const override { return base_.num_items(); }
  ValuationKind kind() const override { return base_.kind(); }
  Rational Value(const ItemSet& s) override;
  DemandResult Demand(const PriceVector& prices) override;
  const QueryLedger& ledger() const override { return base_.ledger(); }

 private:
  CountedOracle& base_;
};

}  // namespace primcx

#endif  // PRIMCX_ORACLES_ADAPTERS_H_
