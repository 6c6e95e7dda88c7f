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

#include "primcx/hardness/demand_families.h"

#include <algorithm>
#include <bit>
#include <set>

#include "primcx/core/errors.h"
#include "primcx/core/item_set.h"
#include "primcx/kopt/k_optimal.h"
#include "primcx/oracles/counted_oracle.h"

namespace primcx {
namespace {

Rational MaskPrice(uint32_t mask, const std::vector<Rational>& prices) {
  Rational total(0);
  for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    total += prices[std::countr_zero(rest)];
  }
  return total;
}

// Lexicographic order of the sorted index sequences of two equal-size
// sets: the one holding the smallest differing item comes first.
bool LexBefore(uint32_t a, uint32_t b) {
  const uint32_t diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

std::vector<Rational> FinitePrices(const HardSubmodularValuation& v,
                                   const PriceVector& prices) {
  if (prices.num_items() != v.num_items()) {
    throw DomainError("price vector size mismatch");
  }
  std::vector<Rational> dense = prices.ToDense();
  for (const Rational& p : dense) {
    if (p.is_infinite()) throw DomainError("candidate families need finite prices");
  }
  return dense;
}

// All demanded sets (exhaustive).
std::vector<uint32_t> DemandedSets(const HardSubmodularValuation& v,
                                   const std::vector<Rational>& prices) {
  const int m = v.num_items();
  const uint32_t count = uint32_t{1} << m;
  std::vector<Rational> price(count, Rational(0));
  for (uint32_t mask = 1; mask < count; ++mask) {
    price[mask] = price[mask & (mask - 1)] + prices[std::countr_zero(mask)];
  }
  std::vector<uint32_t> best;
  Rational best_profit;
  for (uint32_t mask = 0; mask < count; ++mask) {
    Rational profit = v.ValueOfMask(mask) - price[mask];
    if (best.empty() || profit > best_profit) {
      best.assign(1, mask);
      best_profit = std::move(profit);
    } else if (profit == best_profit) {
      best.push_back(mask);
    }
  }
  return best;
}

}  // namespace

bool CheaperSet(uint32_t a, uint32_t b, const std::vector<Rational>& prices) {
  Rational pa = MaskPrice(a, prices);
  Rational pb = MaskPrice(b, prices);
  if (pa != pb) return pa < pb;
  return LexBefore(a, b);
}

std::vector<uint32_t> SetsByPrice(int m, int d,
                                  const std::vector<Rational>& prices) {
  std::vector<std::pair<Rational, uint32_t>> keyed;
  ForEachSubsetOfSize(m, d, [&](uint64_t mask) {
    uint32_t s = static_cast<uint32_t>(mask);
    keyed.emplace_back(MaskPrice(s, prices), s);
  });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return LexBefore(a.second, b.second);
  });
  std::vector<uint32_t> sets;
  sets.reserve(keyed.size());
  for (const auto& [price, mask] : keyed) sets.push_back(mask);
  return sets;
}

std::map<int, std::vector<uint32_t>> CandidateFamilies(
    const HardSubmodularValuation& v, const PriceVector& prices) {
  const int m = v.num_items();
  const int k = v.k();
  const std::vector<Rational> dense = FinitePrices(v, prices);
  std::map<int, std::vector<uint32_t>> families;
  for (int d = 0; d <= m; ++d) {
    if (d == k) continue;
    std::vector<uint32_t> ordered = SetsByPrice(m, d, dense);
    if (d == k + 1 || (d == k - 1 && d >= 0)) {
      std::vector<uint32_t> prefix;
      for (uint32_t s : ordered) {
        prefix.push_back(s);
        if (d == k + 1 ? v.InB(s) : v.InR(s)) break;
      }
      families[d] = std::move(prefix);
    } else {
      families[d] = {ordered.front()};
    }
  }
  const uint32_t full = (m == 32) ? ~uint32_t{0} : (uint32_t{1} << m) - 1;
  std::set<uint32_t> size_k = {SetsByPrice(m, k, dense).front()};
  for (uint32_t s : families[k + 1]) {
    for (uint32_t rest = s; rest != 0; rest &= rest - 1) {
      size_k.insert(s & ~(rest & (~rest + 1)));
    }
  }
  if (k >= 1) {
    for (uint32_t s : families[k - 1]) {
      for (uint32_t out = full & ~s; out != 0; out &= out - 1) {
        size_k.insert(s | (out & (~out + 1)));
      }
    }
  }
  std::vector<uint32_t> family(size_k.begin(), size_k.end());
  std::sort(family.begin(), family.end(), [&dense](uint32_t a, uint32_t b) {
    return CheaperSet(a, b, dense);
  });
  families[k] = std::move(family);
  return families;
}

SizeKCheck CheckSizeKClaim(const HardSubmodularValuation& v,
                           const PriceVector& prices) {
  const std::vector<Rational> dense = FinitePrices(v, prices);
  std::vector<uint32_t> demanded = DemandedSets(v, dense);
  SizeKCheck check;
  check.premise = std::all_of(demanded.begin(), demanded.end(),
                              [&v](uint32_t s) { return std::popcount(s) == v.k(); });
  if (!check.premise) return check;
  std::vector<uint32_t> family = CandidateFamilies(v, prices)[v.k()];
  std::set<uint32_t> members(family.begin(), family.end());
  for (uint32_t s : demanded) {
    if (!members.count(s)) check.holds = false;
  }
  return check;
}

bool GIsUniqueKOptimal(const HardSubmodularValuation& v) {
  const Rational g_value = v.ValueOfMask(v.g_mask());
  bool unique = true;
  ForEachSubsetOfSize(v.num_items(), v.k(), [&](uint64_t mask) {
    uint32_t s = static_cast<uint32_t>(mask);
    if (s != v.g_mask() && v.ValueOfMask(s) >= g_value) unique = false;
  });
  return unique;
}

bool GreedyFindsG(const HardSubmodularValuation& v) {
  auto shared = std::make_shared<HardSubmodularValuation>(v);
  CountedOracle oracle(shared);
  return GreedyKOptimal(oracle, v.k()).set == v.g();
}

bool RandomProbeFindsG(const HardSubmodularValuation& v, int64_t budget,
                       Rng& rng) {
  const int m = v.num_items();
  const int k = v.k();
  auto shared = std::make_shared<HardSubmodularValuation>(v);
  CountedOracle oracle(shared);
  const Rational g_value = v.ValueOfMask(v.g_mask());
  std::set<uint32_t> seen;
  std::vector<int> items(m);
  for (int i = 0; i < m; ++i) items[i] = i;
  // Stops early once every k-set has been probed.
  double total = 1;
  for (int i = 0; i < k; ++i) total = total * (m - i) / (i + 1);
  while (static_cast<int64_t>(seen.size()) < budget &&
         static_cast<double>(seen.size()) < total) {
    rng.Shuffle(items);
    uint32_t s = 0;
    for (int i = 0; i < k; ++i) s |= uint32_t{1} << items[i];
    if (!seen.insert(s).second) continue;
    if (oracle.Value(ItemSet::FromMask(m, s)) == g_value) return true;
  }
  return false;
}

}  // namespace primcx
