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

#ifndef PRIMCX_VALUATIONS_HARD_SUBMODULAR_H_
#define PRIMCX_VALUATIONS_HARD_SUBMODULAR_H_

#include <cstdint>
#include <vector>

#include "primcx/core/rng.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

// The hard submodular family: m even, k = m/2, a family B of (k+1)-sets
// and a k-set G contained in no member of B. Sets are handled as bit masks,
// which caps m at kMaxItems.
//
//   |S| > k+1              k
//   |S| = k+1, S in B      k
//   |S| = k+1, otherwise   k - 3/11
//   S = G                  k - 6/11
//   |S| = k, otherwise     k - 7/11
//   |S| = k-1, S in R      k - 1
//   |S| = k-1, otherwise   k - 14/11
//   |S| < k-1              |S|
//
// R is the family of (k-1)-sets contained in no member of B; it is derived
// from B on demand.
class HardSubmodularValuation : public Valuation {
 public:
  static constexpr int kMaxItems = 24;

  HardSubmodularValuation(int num_items, std::vector<uint32_t> b_family,
                          uint32_t g);

  int num_items() const override { return num_items_; }
  ValuationKind kind() const override { return ValuationKind::kHardSubmodular; }
  Rational Value(const ItemSet& s) const override;
  Rational ValueOfMask(uint32_t mask) const;

  int k() const { return num_items_ / 2; }
  const std::vector<uint32_t>& b_family() const { return b_family_; }
  uint32_t g_mask() const { return g_; }
  ItemSet g() const;

  bool InB(uint32_t mask) const;
  // Only meaningful for masks of size k-1.
  bool InR(uint32_t mask) const;

 private:
  int num_items_;
  std::vector<uint32_t> b_family_;  // Sorted ascending.
  uint32_t g_;
};

struct HardSample {
  HardSubmodularValuation valuation;
  // Number of times B was redrawn because every k-set was covered.
  int resamples = 0;
};

// Draws B by including each (k+1)-set independently with probability 1/m^2,
// then G uniformly among the k-sets not covered by B.
HardSample SampleHardValuation(int num_items, Rng& rng);

// Exhaustive check of v(S+a) + v(S+b) >= v(S+a+b) + v(S). Needs m <= 12.
bool VerifySubmodular(const Valuation& v);

// Calls f(mask) for every size-r subset of {0..n-1}, ascending.
template <typename F>
void ForEachSubsetOfSize(int n, int r, F&& f) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    f(uint64_t{0});
    return;
  }
  uint64_t mask = (uint64_t{1} << r) - 1;
  const uint64_t limit = uint64_t{1} << n;
  while (mask < limit) {
    f(mask);
    uint64_t low = mask & (~mask + 1);
    uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

}  // namespace primcx

#endif  // PRIMCX_VALUATIONS_HARD_SUBMODULAR_H_
