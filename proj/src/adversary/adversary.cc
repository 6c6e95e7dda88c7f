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

#include "primcx/adversary/adversary.h"

#include <algorithm>
#include <utility>

#include "primcx/core/errors.h"
#include "primcx/valuations/valuation_io.h"

namespace primcx {

nlohmann::json AdversaryQueryToJson(const AdversaryQuery& q) {
  using nlohmann::json;
  json line;
  if (q.kind == AdversaryQuery::Kind::kValue) {
    line["kind"] = "value";
    line["input"] = ItemSetToJson(q.set);
    line["output"] = q.value.ToString();
  } else {
    line["kind"] = "demand";
    json dense = json::array();
    for (const Rational& p : q.prices.ToDense()) dense.push_back(p.ToString());
    line["input"] = dense;
    line["output"] = {{"set", ItemSetToJson(q.set)},
                      {"value", q.value.ToString()}};
  }
  if (q.implicit) line["implicit"] = true;
  return line;
}

AdversaryState::AdversaryState(int m)
    : m_(m), eps_(1), committed_(m > 0 ? m : 0) {
  if (m < 2) throw DomainError("adversary needs at least two items");
  ItemSet all = ItemSet::Full(m);
  rows_.push_back(all);
  transcript_.push_back({AdversaryQuery::Kind::kValue, all, PriceVector(),
                         Rational(m), /*implicit=*/true});
}

std::vector<int> AdversaryState::Uncommitted() const {
  std::vector<int> out;
  for (int j = 0; j < m_; ++j) {
    if (!committed_[j]) out.push_back(j);
  }
  return out;
}

RationalMatrix AdversaryState::ConstraintMatrix() const {
  const std::vector<int> free = Uncommitted();
  RationalMatrix a(0, static_cast<int>(free.size()));
  for (const ItemSet& row : rows_) {
    RationalVector r(free.size(), Rational(0));
    for (size_t c = 0; c < free.size(); ++c) {
      if (row.Contains(free[c])) r[c] = Rational(1);
    }
    a.AppendRow(r);
  }
  return a;
}

Rational AdversaryState::ValueOf(const ItemSet& s) const {
  Rational total(0);
  int free = 0;
  for (int j : s) {
    if (committed_[j]) {
      total += *committed_[j];
    } else {
      ++free;
    }
  }
  return total + eps_ * Rational(free);
}

Rational AdversaryState::Value(const ItemSet& s) {
  if (s.num_items() != m_) throw StructuralError("item set size mismatch");
  Rational value = ValueOf(s);
  ItemSet row(m_);
  for (int j : s) {
    if (!committed_[j]) row.Insert(j);
  }
  if (row.size() > 0) rows_.push_back(std::move(row));
  transcript_.push_back(
      {AdversaryQuery::Kind::kValue, s, PriceVector(), value, false});
  return value;
}

DemandResult AdversaryState::DemandPositive(const PriceVector& prices) {
  const std::vector<int> free = Uncommitted();
  if (!free.empty()) {
    std::optional<Rational> p_min;
    prices.ForEachFinite([&](int, const Rational& p) {
      if (!p_min || p < *p_min) p_min = p;
    });
    Rational eps_new = eps_;
    if (p_min) eps_new = std::min(eps_, *p_min / Rational(m_));
    eps_new /= Rational(2);

    RationalMatrix a = ConstraintMatrix();
    RationalVector b(a.rows());
    for (int r = 0; r < a.rows(); ++r) {
      b[r] = eps_ * Rational(static_cast<int64_t>(rows_[r].size()));
    }
    std::optional<RationalVector> sol =
        BfsSolve(a, b, RationalVector(free.size(), eps_));
    if (!sol) throw InvariantViolation("all-eps point left the constraints");
    const Rational keep = Rational(1) - eps_new / eps_;
    int newly = 0;
    for (size_t c = 0; c < free.size(); ++c) {
      if ((*sol)[c].is_zero()) continue;
      committed_[free[c]] = keep * (*sol)[c] + eps_new;
      ++newly;
    }
    if (newly > a.rows()) {
      throw InvariantViolation("committed more items than constraint rows");
    }
    num_committed_ += newly;
    std::vector<ItemSet> rewritten;
    for (ItemSet& row : rows_) {
      ItemSet kept(m_);
      for (int j : row) {
        if (!committed_[j]) kept.Insert(j);
      }
      if (kept.size() > 0) rewritten.push_back(std::move(kept));
    }
    rows_ = std::move(rewritten);
    eps_ = eps_new;
  }
  // Every uncommitted item is now worth eps < p_min / m, so only committed
  // items can have positive gain.
  DemandResult result{ItemSet(m_), Rational(0)};
  for (int j = 0; j < m_; ++j) {
    if (!committed_[j] || prices[j].is_infinite()) continue;
    if (*committed_[j] > prices[j]) {
      result.set.Insert(j);
      result.value += *committed_[j];
    }
  }
  return result;
}

DemandResult AdversaryState::Demand(const PriceVector& prices) {
  if (prices.num_items() != m_) throw StructuralError("price vector mismatch");
  ItemSet zero(m_);
  prices.ForEachFinite([&](int j, const Rational& p) {
    if (p.is_zero()) zero.Insert(j);
  });
  DemandResult result;
  if (zero.size() > 0) {
    PriceVector positive = prices;
    positive.SetOn(zero, Rational::Infinity());
    const Rational zero_value = Value(zero);
    result = DemandPositive(positive);
    for (int j : zero) result.set.Insert(j);
    result.value += zero_value;
  } else {
    result = DemandPositive(prices);
  }
  transcript_.push_back(
      {AdversaryQuery::Kind::kDemand, result.set, prices, result.value, false});
  ReplayReport check = ReplayTranscript(transcript_, *Witness());
  if (!check.ok) throw InvariantViolation("adversary witness: " + check.reason);
  return result;
}

std::shared_ptr<const AdditiveValuation> AdversaryState::Witness() const {
  std::vector<Rational> values(m_);
  for (int j = 0; j < m_; ++j) values[j] = committed_[j] ? *committed_[j] : eps_;
  return std::make_shared<AdditiveValuation>(std::move(values));
}

Rational AdversaryOracle::Value(const ItemSet& s) {
  const size_t from = state_.transcript().size();
  Rational value = state_.Value(s);
  ++ledger_.value_queries;
  Log(from);
  return value;
}

DemandResult AdversaryOracle::Demand(const PriceVector& prices) {
  const size_t from = state_.transcript().size();
  DemandResult result = state_.Demand(prices);
  // The zero-price reduction adds one value query of its own.
  ledger_.value_queries +=
      static_cast<int64_t>(state_.transcript().size() - from) - 1;
  ++ledger_.demand_queries;
  Log(from);
  return result;
}

void AdversaryOracle::Log(size_t from) {
  if (transcript_ == nullptr) return;
  const auto& t = state_.transcript();
  for (size_t i = from; i < t.size(); ++i) {
    nlohmann::json line = AdversaryQueryToJson(t[i]);
    line["ledger"] = {{"value", ledger_.value_queries},
                      {"demand", ledger_.demand_queries},
                      {"primitive", ledger_.primitive_ops}};
    *transcript_ << line.dump() << '\n';
  }
}

namespace {

ItemSet MinItems(const std::vector<Rational>& values) {
  ItemSet out(static_cast<int>(values.size()));
  const Rational& low = *std::min_element(values.begin(), values.end());
  for (size_t j = 0; j < values.size(); ++j) {
    if (values[j] == low) out.Insert(static_cast<int>(j));
  }
  return out;
}

}  // namespace

std::optional<AmbiguityCertificate> FindAmbiguityCertificate(
    const AdversaryState& state) {
  const int m = state.num_items();
  const std::vector<int> free = state.Uncommitted();
  if (free.empty()) return std::nullopt;
  const RationalMatrix a = state.ConstraintMatrix();
  if (a.Rank() + state.num_committed() > m - 2) return std::nullopt;
  std::optional<RationalVector> k;
  for (RationalVector& candidate : a.KernelBasis()) {
    if (std::any_of(candidate.begin(), candidate.end(),
                    [&](const Rational& v) { return v != candidate[0]; })) {
      k = std::move(candidate);
      break;
    }
  }
  if (!k) return std::nullopt;
  Rational largest(0);
  for (const Rational& v : *k) largest = std::max(largest, v.Abs());
  const Rational& eps = state.eps();
  AmbiguityCertificate cert;
  cert.delta = eps / (Rational(2) * largest);
  cert.direction.assign(m, Rational(0));
  std::vector<Rational> x(m), y(m);
  for (int j = 0; j < m; ++j) {
    if (state.committed()[j]) x[j] = y[j] = *state.committed()[j];
  }
  for (size_t c = 0; c < free.size(); ++c) {
    const Rational shift = cert.delta * (*k)[c];
    cert.direction[free[c]] = (*k)[c];
    x[free[c]] = eps + shift;
    y[free[c]] = eps - shift;
  }
  cert.min_items_x = MinItems(x);
  cert.min_items_y = MinItems(y);
  cert.x = std::make_shared<AdditiveValuation>(std::move(x));
  cert.y = std::make_shared<AdditiveValuation>(std::move(y));
  return cert;
}

ReplayReport ReplayTranscript(const std::vector<AdversaryQuery>& transcript,
                              const AdditiveValuation& v) {
  const std::vector<Rational>& values = v.values();
  for (size_t i = 0; i < transcript.size(); ++i) {
    const AdversaryQuery& q = transcript[i];
    const int at = static_cast<int>(i);
    if (v.Value(q.set) != q.value) {
      return {false, at, "value mismatch at query " + std::to_string(i)};
    }
    if (q.kind == AdversaryQuery::Kind::kValue) continue;
    // Additive: the best profit is the sum of positive gains.
    Rational best(0);
    q.prices.ForEachFinite([&](int j, const Rational& p) {
      if (values[j] > p) best += values[j] - p;
    });
    const Rational paid = q.prices.PriceOf(q.set);
    if (paid.is_infinite() || v.Value(q.set) - paid != best) {
      return {false, at, "demand not optimal at query " + std::to_string(i)};
    }
  }
  return {};
}

}  // namespace primcx
