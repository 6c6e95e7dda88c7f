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

#ifndef PRIMCX_ORACLES_ORACLE_H_
#define PRIMCX_ORACLES_ORACLE_H_

#include "primcx/core/item_set.h"
#include "primcx/core/price_vector.h"
#include "primcx/core/query_ledger.h"
#include "primcx/core/rational.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

struct DemandResult {
  ItemSet set;
  Rational value;  // v(set), returned alongside the set.
};

// The query interface the algorithms run against. Implementations either
// answer from a valuation (CountedOracle), translate queries for another
// oracle (the adapters), or answer adaptively (the adversary). Every
// implementation reports into a single ledger owned by the innermost
// oracle.
class QueryOracle {
 public:
  virtual ~QueryOracle() = default;

  virtual int num_items() const = 0;
  // The class of the function being queried, which gates which algorithms
  // may run against it.
  virtual ValuationKind kind() const = 0;
  virtual Rational Value(const ItemSet& s) = 0;
  virtual DemandResult Demand(const PriceVector& prices) = 0;
  virtual const QueryLedger& ledger() const = 0;
};

}  // namespace primcx

#endif  // PRIMCX_ORACLES_ORACLE_H_
