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

#ifndef PRIMCX_CORE_QUERY_LEDGER_H_
#define PRIMCX_CORE_QUERY_LEDGER_H_

#include <cstdint>
#include <string>

namespace primcx {

// Query counters for one run. A selling-separately primitive counts as one
// primitive plus one demand and one value query.
struct QueryLedger {
  int64_t value_queries = 0;
  int64_t demand_queries = 0;
  int64_t primitive_ops = 0;

  int64_t Total() const { return value_queries + demand_queries; }
  void Reset() { *this = QueryLedger(); }
  std::string ToString() const;

  friend QueryLedger operator-(const QueryLedger& a, const QueryLedger& b) {
    return {a.value_queries - b.value_queries,
            a.demand_queries - b.demand_queries,
            a.primitive_ops - b.primitive_ops};
  }
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

}  // namespace primcx

#endif  // PRIMCX_CORE_QUERY_LEDGER_H_
