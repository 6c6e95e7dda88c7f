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

#include "primcx/oracles/counted_oracle.h"

#include "json.hpp"
#include "primcx/core/errors.h"

namespace primcx {

CountedOracle::CountedOracle(std::shared_ptr<const Valuation> valuation,
                             TiePolicy ties)
    : valuation_(std::move(valuation)), ties_(std::move(ties)) {
  if (valuation_ == nullptr) throw StructuralError("null valuation");
}

Rational CountedOracle::Value(const ItemSet& s) {
  if (s.num_items() != num_items()) {
    throw StructuralError("item set does not match oracle");
  }
  Rational value = valuation_->Value(s);
  ++ledger_.value_queries;
  if (transcript_ != nullptr) Log("value", &s, nullptr, nullptr, &value);
  return value;
}

DemandResult CountedOracle::Answer(const PriceVector& prices) {
  if (prices.num_items() != num_items()) {
    throw StructuralError("price vector does not match oracle");
  }
  ItemSet set = ComputeDemand(*valuation_, prices, ties_);
  Rational value = valuation_->Value(set);
  return {std::move(set), std::move(value)};
}

DemandResult CountedOracle::Demand(const PriceVector& prices) {
  DemandResult result = Answer(prices);
  ++ledger_.demand_queries;
  if (transcript_ != nullptr) Log("demand", nullptr, &prices, &result, nullptr);
  return result;
}

DemandResult CountedOracle::SellingSeparately(const PriceVector& prices) {
  DemandResult result = Answer(prices);
  ++ledger_.demand_queries;
  ++ledger_.value_queries;
  ++ledger_.primitive_ops;
  if (transcript_ != nullptr) {
    Log("selling_separately", nullptr, &prices, &result, nullptr);
  }
  return result;
}

void CountedOracle::Log(const char* kind, const ItemSet* set,
                        const PriceVector* prices, const DemandResult* demand,
                        const Rational* value) {
  using nlohmann::json;
  json line;
  line["kind"] = kind;
  if (set != nullptr) {
    json items = json::array();
    for (int item : *set) items.push_back(item);
    line["input"] = items;
  } else {
    json dense = json::array();
    for (const Rational& p : prices->ToDense()) dense.push_back(p.ToString());
    line["input"] = dense;
  }
  if (demand != nullptr) {
    json items = json::array();
    for (int item : demand->set) items.push_back(item);
    line["output"] = {{"set", items}, {"value", demand->value.ToString()}};
  } else {
    line["output"] = value->ToString();
  }
  line["ledger"] = {{"value", ledger_.value_queries},
                    {"demand", ledger_.demand_queries},
                    {"primitive", ledger_.primitive_ops}};
  *transcript_ << line.dump() << '\n';
}

}  // namespace primcx
