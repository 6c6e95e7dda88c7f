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

#include "primcx/oracles/demand.h"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "primcx/core/errors.h"
#include "primcx/valuations/hard_submodular.h"
#include "primcx/valuations/weighted_matroid_rank.h"

namespace primcx {
namespace {

// Exhaustive argmax over subsets of the finitely priced items.
DemandFamily EnumerateWithLimit(const Valuation& v, const PriceVector& prices,
                                int max_items) {
  const int m = v.num_items();
  if (prices.num_items() != m) {
    throw StructuralError("price vector does not match valuation");
  }
  if (m > max_items) {
    throw CapabilityError("demand enumeration needs m <= " +
                          std::to_string(max_items) + ", got " +
                          std::to_string(m));
  }
  std::vector<int> finite;
  std::vector<Rational> price;
  prices.ForEachFinite([&](int item, const Rational& p) {
    finite.push_back(item);
    price.push_back(p);
  });
  const int f = static_cast<int>(finite.size());
  const uint64_t count = uint64_t{1} << f;
  const auto* hard = dynamic_cast<const HardSubmodularValuation*>(&v);

  std::vector<Rational> price_of;
  const bool table = f <= 20;
  if (table) price_of.resize(count);

  DemandFamily family;
  bool have_best = false;
  for (uint64_t sub = 0; sub < count; ++sub) {
    uint64_t mask = 0;
    for (uint64_t rest = sub; rest != 0; rest &= rest - 1) {
      mask |= uint64_t{1} << finite[std::countr_zero(rest)];
    }
    Rational cost;
    if (table) {
      if (sub != 0) {
        price_of[sub] = price_of[sub & (sub - 1)] + price[std::countr_zero(sub)];
      }
      cost = price_of[sub];
    } else {
      for (uint64_t rest = sub; rest != 0; rest &= rest - 1) {
        cost += price[std::countr_zero(rest)];
      }
    }
    Rational value = hard != nullptr
                         ? hard->ValueOfMask(static_cast<uint32_t>(mask))
                         : v.Value(ItemSet::FromMask(m, mask));
    Rational profit = value - cost;
    if (!have_best || profit > family.max_profit) {
      family.max_profit = profit;
      family.sets.clear();
      have_best = true;
    }
    if (profit == family.max_profit) {
      family.sets.push_back(ItemSet::FromMask(m, mask));
    }
  }
  return family;
}

ItemSet AdditiveDemand(const AdditiveValuation& v, const PriceVector& prices,
                       TieResolver& ties) {
  const int m = v.num_items();
  ItemSet strict(m);
  std::vector<int> tied;
  prices.ForEachFinite([&](int item, const Rational& p) {
    const Rational& value = v.value(item);
    if (value > p) {
      strict.Insert(item);
    } else if (value == p) {
      tied.push_back(item);
    }
  });
  switch (ties.policy().kind) {
    case TiePolicy::Kind::kLexMin:
      return strict;
    case TiePolicy::Kind::kLexMax:
      for (int item : tied) strict.Insert(item);
      return strict;
    case TiePolicy::Kind::kSeededRandom:
      for (int item : tied) {
        if (ties.rng().Coin()) strict.Insert(item);
      }
      return strict;
    case TiePolicy::Kind::kAdversarial: {
      if (tied.size() > static_cast<size_t>(kMaxEnumerableItems)) {
        throw CapabilityError("too many tied items to enumerate: " +
                              std::to_string(tied.size()));
      }
      std::vector<ItemSet> family;
      const uint64_t count = uint64_t{1} << tied.size();
      family.reserve(count);
      for (uint64_t sub = 0; sub < count; ++sub) {
        ItemSet s = strict;
        for (uint64_t rest = sub; rest != 0; rest &= rest - 1) {
          s.Insert(tied[std::countr_zero(rest)]);
        }
        family.push_back(std::move(s));
      }
      return ties.Choose(family, prices);
    }
  }
  return strict;
}

// LexMin demand for prices taking few distinct finite values. Items sharing a
// price are already in gain order within the valuation's greedy order, so a
// merge over price groups replaces the full sort. Returns nullopt when there
// are too many distinct prices.
std::optional<ItemSet> MatroidDemandFewPrices(const WeightedMatroidRankValuation& v,
                                              const PriceVector& prices) {
  constexpr int kMaxGroups = 8;
  const int m = v.num_items();
  std::vector<Rational> group_price;
  std::vector<int8_t> group_of(m, -1);
  bool too_many = false;
  prices.ForEachFinite([&](int item, const Rational& p) {
    if (too_many) return;
    int g = 0;
    while (g < static_cast<int>(group_price.size()) && group_price[g] != p) ++g;
    if (g == static_cast<int>(group_price.size())) {
      if (g == kMaxGroups) {
        too_many = true;
        return;
      }
      group_price.push_back(p);
    }
    group_of[item] = static_cast<int8_t>(g);
  });
  if (too_many) return std::nullopt;

  const std::vector<Rational>& w = v.weights();
  const int groups = static_cast<int>(group_price.size());
  std::vector<std::vector<int>> members(groups);
  for (int item : v.greedy_order()) {
    const int g = group_of[item];
    if (g >= 0 && w[item] > group_price[g]) members[g].push_back(item);
  }

  std::unique_ptr<Matroid::Builder> builder = v.matroid().NewBuilder();
  ItemSet chosen(m);
  std::vector<size_t> head(groups, 0);
  std::vector<Rational> gain(groups);
  for (int g = 0; g < groups; ++g) {
    if (!members[g].empty()) gain[g] = w[members[g][0]] - group_price[g];
  }
  while (true) {
    int best = -1;
    for (int g = 0; g < groups; ++g) {
      if (head[g] == members[g].size()) continue;
      if (best < 0) {
        best = g;
        continue;
      }
      auto c = gain[g] <=> gain[best];
      if (c > 0 || (c == 0 && members[g][head[g]] < members[best][head[best]])) {
        best = g;
      }
    }
    if (best < 0) break;
    const int item = members[best][head[best]];
    if (builder->CanAdd(item)) {
      builder->Add(item);
      chosen.Insert(item);
    }
    if (++head[best] < members[best].size()) {
      gain[best] = w[members[best][head[best]]] - group_price[best];
    }
  }
  return chosen;
}

ItemSet MatroidDemand(const WeightedMatroidRankValuation& v,
                      const PriceVector& prices, TieResolver& ties) {
  const TiePolicy::Kind kind = ties.policy().kind;
  if (kind == TiePolicy::Kind::kLexMin) {
    if (std::optional<ItemSet> fast = MatroidDemandFewPrices(v, prices)) {
      return *std::move(fast);
    }
  }
  std::vector<std::pair<Rational, int>> positive;
  std::vector<int> zero;
  prices.ForEachFinite([&](int item, const Rational& p) {
    Rational gain = v.weights()[item] - p;
    if (gain.sign() > 0) {
      positive.emplace_back(std::move(gain), item);
    } else if (gain.sign() == 0) {
      zero.push_back(item);
    }
  });
  if (kind == TiePolicy::Kind::kLexMax) {
    std::reverse(positive.begin(), positive.end());
    std::reverse(zero.begin(), zero.end());
  } else if (kind == TiePolicy::Kind::kSeededRandom) {
    ties.rng().Shuffle(positive);
    ties.rng().Shuffle(zero);
  }
  // Gains descending; the pre-arranged order breaks equal gains.
  std::vector<int> order(positive.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto c = positive[a].first <=> positive[b].first;
    return c != 0 ? c > 0 : a < b;
  });

  std::unique_ptr<Matroid::Builder> builder = v.matroid().NewBuilder();
  ItemSet chosen(v.num_items());
  for (int index : order) {
    const int item = positive[index].second;
    if (builder->CanAdd(item)) {
      builder->Add(item);
      chosen.Insert(item);
    }
  }
  if (kind != TiePolicy::Kind::kLexMin) {
    for (int item : zero) {
      if (kind == TiePolicy::Kind::kSeededRandom && !ties.rng().Coin()) continue;
      if (builder->CanAdd(item)) {
        builder->Add(item);
        chosen.Insert(item);
      }
    }
  }
  return chosen;
}

}  // namespace

TieResolver::TieResolver(TiePolicy policy)
    : policy_(std::move(policy)), rng_(Rng::Mix(policy_.seed)) {
  if (policy_.kind == TiePolicy::Kind::kAdversarial && !policy_.callback) {
    throw DomainError("adversarial tie policy without a callback");
  }
}

ItemSet TieResolver::Choose(const std::vector<ItemSet>& family,
                            const PriceVector& prices) {
  if (family.empty()) throw InvariantViolation("empty demanded family");
  switch (policy_.kind) {
    case TiePolicy::Kind::kLexMin:
      return family.front();
    case TiePolicy::Kind::kLexMax:
      return family.back();
    case TiePolicy::Kind::kSeededRandom:
      return family[rng_.UniformInt(family.size())];
    case TiePolicy::Kind::kAdversarial: {
      ItemSet choice = policy_.callback(family, prices);
      if (std::find(family.begin(), family.end(), choice) == family.end()) {
        throw InvariantViolation("tie callback answered with a set that is "
                                 "not demanded: " + choice.ToString());
      }
      return choice;
    }
  }
  return family.front();
}

std::optional<Rational> Profit(const Valuation& v, const ItemSet& s,
                               const PriceVector& prices) {
  Rational cost = prices.PriceOf(s);
  if (cost.is_infinite()) return std::nullopt;
  return v.Value(s) - cost;
}

DemandFamily EnumerateDemand(const Valuation& v, const PriceVector& prices) {
  return EnumerateWithLimit(v, prices, kMaxEnumerableItems);
}

ItemSet ComputeDemand(const Valuation& v, const PriceVector& prices,
                      TieResolver& ties) {
  if (prices.num_items() != v.num_items()) {
    throw StructuralError("price vector does not match valuation");
  }
  if (auto* additive = dynamic_cast<const AdditiveValuation*>(&v)) {
    return AdditiveDemand(*additive, prices, ties);
  }
  const bool adversarial = ties.policy().kind == TiePolicy::Kind::kAdversarial;
  if (auto* wmr = dynamic_cast<const WeightedMatroidRankValuation*>(&v);
      wmr != nullptr && !adversarial) {
    return MatroidDemand(*wmr, prices, ties);
  }
  const int limit = (!adversarial && v.kind() == ValuationKind::kHardSubmodular)
                        ? HardSubmodularValuation::kMaxItems
                        : kMaxEnumerableItems;
  DemandFamily family = EnumerateWithLimit(v, prices, limit);
  return ties.Choose(family.sets, prices);
}

}  // namespace primcx
