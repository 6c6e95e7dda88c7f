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

#ifndef PRIMCX_ADVERSARY_ADVERSARY_H_
#define PRIMCX_ADVERSARY_ADVERSARY_H_

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "primcx/adversary/rational_matrix.h"
#include "primcx/core/item_set.h"
#include "primcx/core/price_vector.h"
#include "primcx/core/rational.h"
#include "primcx/oracles/oracle.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

// One answered query. For a value query `set` is the input; for a demand
// query `prices` is the input and `set` the answer. `value` is the value
// returned. The base-case constraint v(M) = m is recorded as an implicit
// value query.
struct AdversaryQuery {
  enum class Kind { kValue, kDemand };
  Kind kind;
  ItemSet set;
  PriceVector prices;
  Rational value;
  bool implicit = false;
};

nlohmann::json AdversaryQueryToJson(const AdversaryQuery& q);

// Answers value and demand queries for an additive valuation it never fully
// commits to. State: committed values L, 0/1 constraint rows over the
// uncommitted items, and a scale eps. Every answer so far is reproduced by
// the valuation equal to L on committed items and eps elsewhere, and more
// generally by any non-negative v on the uncommitted items with
// A v = eps A 1.
class AdversaryState {
 public:
  // Throws DomainError unless m >= 2.
  explicit AdversaryState(int m);

  int num_items() const { return m_; }
  const Rational& eps() const { return eps_; }
  const std::vector<std::optional<Rational>>& committed() const {
    return committed_;
  }
  int num_committed() const { return num_committed_; }
  std::vector<int> Uncommitted() const;
  bool exhausted() const { return num_committed_ == m_; }
  // Constraint rows as item sets; each is a non-empty set of uncommitted
  // items.
  const std::vector<ItemSet>& rows() const { return rows_; }
  // The 0/1 matrix of `rows()` over Uncommitted(), in ascending item order.
  RationalMatrix ConstraintMatrix() const;
  int Rank() const { return ConstraintMatrix().Rank(); }
  const std::vector<AdversaryQuery>& transcript() const { return transcript_; }

  // eps |S \ L| + sum of L over S; appends the row S \ L.
  Rational Value(const ItemSet& s);
  // Zero prices are handled by pricing those items at infinity, answering,
  // and adding the zero-priced set with one extra value query (recorded in
  // the transcript before the demand entry).
  DemandResult Demand(const PriceVector& prices);

  // L on committed items, eps on the rest.
  std::shared_ptr<const AdditiveValuation> Witness() const;

 private:
  Rational ValueOf(const ItemSet& s) const;
  DemandResult DemandPositive(const PriceVector& prices);

  int m_;
  Rational eps_;
  std::vector<std::optional<Rational>> committed_;
  int num_committed_ = 0;
  std::vector<ItemSet> rows_;
  std::vector<AdversaryQuery> transcript_;
};

// QueryOracle view of an AdversaryState. Reports an additive kind. A zero
// price demand counts one demand and one value query.
class AdversaryOracle : public QueryOracle {
 public:
  explicit AdversaryOracle(int m) : state_(m) {}

  int num_items() const override { return state_.num_items(); }
  ValuationKind kind() const override { return ValuationKind::kAdditive; }
  Rational Value(const ItemSet& s) override;
  DemandResult Demand(const PriceVector& prices) override;
  const QueryLedger& ledger() const override { return ledger_; }

  const AdversaryState& state() const { return state_; }
  // Appends one JSON line per answered query. nullptr stops logging.
  void set_transcript(std::ostream* out) { transcript_ = out; }

 private:
  void Log(size_t from);

  AdversaryState state_;
  QueryLedger ledger_;
  std::ostream* transcript_ = nullptr;
};

// Two additive valuations consistent with every answer so far whose sets of
// minimum-value items are disjoint.
struct AmbiguityCertificate {
  std::shared_ptr<const AdditiveValuation> x;
  std::shared_ptr<const AdditiveValuation> y;
  RationalVector direction;  // Over all items; zero on committed items.
  Rational delta;
  ItemSet min_items_x;
  ItemSet min_items_y;
};

// Exists iff rank(A) + |L| <= m - 2. The witnesses are eps 1 + delta k and
// eps 1 - delta k on the uncommitted items, k the first non-constant
// kernel basis vector of A, delta = eps / (2 max |k_j|).
std::optional<AmbiguityCertificate> FindAmbiguityCertificate(
    const AdversaryState& state);

struct ReplayReport {
  bool ok = true;
  int first_mismatch = -1;
  std::string reason;
};

// Checks every value answer against v and every demand answer for being a
// profit-maximizing set of v under the recorded prices, with its value.
ReplayReport ReplayTranscript(const std::vector<AdversaryQuery>& transcript,
                              const AdditiveValuation& v);

}  // namespace primcx

#endif  // PRIMCX_ADVERSARY_ADVERSARY_H_
