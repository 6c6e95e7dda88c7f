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

#include "primcx/valuations/hard_submodular.h"

#include <algorithm>
#include <bit>

#include "primcx/core/errors.h"

namespace primcx {
namespace {

// True if some member of the sorted family strictly contains k_set by one
// item.
bool CoveredByFamily(const std::vector<uint32_t>& family, int num_items,
                     uint32_t k_set) {
  for (int j = 0; j < num_items; ++j) {
    uint32_t bit = uint32_t{1} << j;
    if (!(k_set & bit) &&
        std::binary_search(family.begin(), family.end(), k_set | bit)) {
      return true;
    }
  }
  return false;
}

uint32_t RandomSubset(int n, int r, Rng& rng) {
  std::vector<int> items(n);
  for (int i = 0; i < n; ++i) items[i] = i;
  uint32_t mask = 0;
  for (int i = 0; i < r; ++i) {
    int j = i + static_cast<int>(rng.UniformInt(n - i));
    std::swap(items[i], items[j]);
    mask |= uint32_t{1} << items[i];
  }
  return mask;
}

}  // namespace

HardSubmodularValuation::HardSubmodularValuation(int num_items,
                                                 std::vector<uint32_t> b_family,
                                                 uint32_t g)
    : num_items_(num_items), b_family_(std::move(b_family)), g_(g) {
  if (num_items < 4 || num_items % 2 != 0 || num_items > kMaxItems) {
    throw DomainError("hard submodular family needs even 4 <= m <= 24, got " +
                      std::to_string(num_items));
  }
  const uint32_t ground = (uint32_t{1} << num_items) - 1;
  std::sort(b_family_.begin(), b_family_.end());
  b_family_.erase(std::unique(b_family_.begin(), b_family_.end()),
                  b_family_.end());
  for (uint32_t b : b_family_) {
    if ((b & ~ground) || std::popcount(b) != k() + 1) {
      throw StructuralError("B member must be a (k+1)-subset");
    }
  }
  if ((g & ~ground) || std::popcount(g) != k()) {
    throw StructuralError("G must be a k-subset");
  }
  if (CoveredByFamily(b_family_, num_items_, g)) {
    throw StructuralError("G is contained in a member of B");
  }
}

ItemSet HardSubmodularValuation::g() const {
  return ItemSet::FromMask(num_items_, g_);
}

bool HardSubmodularValuation::InB(uint32_t mask) const {
  return std::binary_search(b_family_.begin(), b_family_.end(), mask);
}

bool HardSubmodularValuation::InR(uint32_t mask) const {
  for (int a = 0; a < num_items_; ++a) {
    uint32_t bit_a = uint32_t{1} << a;
    if (mask & bit_a) continue;
    for (int b = a + 1; b < num_items_; ++b) {
      uint32_t bit_b = uint32_t{1} << b;
      if (!(mask & bit_b) && InB(mask | bit_a | bit_b)) return false;
    }
  }
  return true;
}

Rational HardSubmodularValuation::ValueOfMask(uint32_t mask) const {
  const int size = std::popcount(mask);
  const int k = this->k();
  if (size > k + 1) return Rational(k);
  if (size == k + 1) return InB(mask) ? Rational(k) : Rational(11 * k - 3, 11);
  if (size == k) {
    return mask == g_ ? Rational(11 * k - 6, 11) : Rational(11 * k - 7, 11);
  }
  if (size == k - 1) {
    return InR(mask) ? Rational(k - 1) : Rational(11 * k - 14, 11);
  }
  return Rational(size);
}

Rational HardSubmodularValuation::Value(const ItemSet& s) const {
  if (s.num_items() != num_items_) {
    throw StructuralError("item set does not match valuation");
  }
  return ValueOfMask(static_cast<uint32_t>(s.ToMask()));
}

HardSample SampleHardValuation(int num_items, Rng& rng) {
  if (num_items < 4 || num_items % 2 != 0 ||
      num_items > HardSubmodularValuation::kMaxItems) {
    throw DomainError("hard submodular family needs even 4 <= m <= 24, got " +
                      std::to_string(num_items));
  }
  constexpr int kRejectionAttempts = 64;
  const int k = num_items / 2;
  const uint64_t inv = static_cast<uint64_t>(num_items) * num_items;
  for (int resamples = 0;; ++resamples) {
    std::vector<uint32_t> b_family;
    ForEachSubsetOfSize(num_items, k + 1, [&](uint64_t mask) {
      if (rng.Bernoulli(1, inv)) {
        b_family.push_back(static_cast<uint32_t>(mask));
      }
    });
    auto covered = [&](uint32_t k_set) {
      return CoveredByFamily(b_family, num_items, k_set);
    };
    for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
      uint32_t g = RandomSubset(num_items, k, rng);
      if (!covered(g)) {
        return {HardSubmodularValuation(num_items, std::move(b_family), g),
                resamples};
      }
    }
    std::vector<uint32_t> eligible;
    ForEachSubsetOfSize(num_items, k, [&](uint64_t mask) {
      if (!covered(static_cast<uint32_t>(mask))) {
        eligible.push_back(static_cast<uint32_t>(mask));
      }
    });
    if (!eligible.empty()) {
      uint32_t g = eligible[rng.UniformInt(eligible.size())];
      return {HardSubmodularValuation(num_items, std::move(b_family), g),
              resamples};
    }
  }
}

bool VerifySubmodular(const Valuation& v) {
  const int m = v.num_items();
  if (m > 12) throw CapabilityError("exhaustive submodularity check needs m <= 12");
  const uint32_t full = (uint32_t{1} << m) - 1;
  std::vector<Rational> table(size_t{1} << m);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    table[mask] = v.Value(ItemSet::FromMask(m, mask));
  }
  for (uint32_t s = 0; s <= full; ++s) {
    for (int a = 0; a < m; ++a) {
      uint32_t bit_a = uint32_t{1} << a;
      if (s & bit_a) continue;
      for (int b = a + 1; b < m; ++b) {
        uint32_t bit_b = uint32_t{1} << b;
        if (s & bit_b) continue;
        if (table[s | bit_a] + table[s | bit_b] <
            table[s | bit_a | bit_b] + table[s]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace primcx
