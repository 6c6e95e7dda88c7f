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

#ifndef PRIMCX_ORACLES_COUNTED_ORACLE_H_
#define PRIMCX_ORACLES_COUNTED_ORACLE_H_

#include <memory>
#include <ostream>

#include "primcx/core/tie_policy.h"
#include "primcx/oracles/demand.h"
#include "primcx/oracles/oracle.h"

namespace primcx {

// Answers queries from a valuation and counts them. Single-threaded; build
// one per run.
class CountedOracle : public QueryOracle {
 public:
  explicit CountedOracle(std::shared_ptr<const Valuation> valuation,
                         TiePolicy ties = TiePolicy::LexMin());

  int num_items() const override { return valuation_->num_items(); }
  ValuationKind kind() const override { return valuation_->kind(); }
  Rational Value(const ItemSet& s) override;
  DemandResult Demand(const PriceVector& prices) override;
  const QueryLedger& ledger() const override { return ledger_; }

  // One demand query plus the value of its answer, counted as one
  // primitive on top of one demand and one value query.
  DemandResult SellingSeparately(const PriceVector& prices);

  const Valuation& valuation() const { return *valuation_; }
  std::shared_ptr<const Valuation> shared_valuation() const {
    return valuation_;
  }
  void ResetLedger() { ledger_.Reset(); }

  // Appends one JSON line per query: {"kind","input","output","ledger"}.
  // Pass nullptr to stop logging. The stream must outlive the oracle.
  void set_transcript(std::ostream* out) { transcript_ = out; }

 private:
  DemandResult Answer(const PriceVector& prices);
  void Log(const char* kind, const ItemSet* set, const PriceVector* prices,
           const DemandResult* demand, const Rational* value);

  std::shared_ptr<const Valuation> valuation_;
  TieResolver ties_;
  QueryLedger ledger_;
  std::ostream* transcript_ = nullptr;
};

}  // namespace primcx

#endif  // PRIMCX_ORACLES_COUNTED_ORACLE_H_
