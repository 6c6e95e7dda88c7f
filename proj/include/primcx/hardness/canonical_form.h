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

#ifndef PRIMCX_HARDNESS_CANONICAL_FORM_H_
#define PRIMCX_HARDNESS_CANONICAL_FORM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"
#include "primcx/valuations/hard_submodular.h"

namespace primcx {

// Value queries restricted to sizes k and k+1, closed under taking the
// (k+1)-supersets of every k-set. Keys are item bit masks.
struct CanonicalQuerySet {
  int num_items = 0;
  std::map<uint32_t, Rational> values;

  bool Contains(uint32_t mask) const { return values.count(mask) > 0; }
  // Every key has size k or k+1 and every k-set has all its supersets.
  bool IsCanonical() const;
};

// Rewrites value queries into canonical form carrying the same
// information about a valuation of the hard family: sizes below k-1 or
// above k+1 are dropped (their values are fixed), a (k-1)-set becomes all
// of its (k+1)-supersets, a k-set is kept together with its (m-k)
// supersets, and a (k+1)-set is kept. Values are read from v.
CanonicalQuerySet Canonicalize(const std::vector<ItemSet>& queries,
                               const HardSubmodularValuation& v);

// The value of any set, read off the canonical answers alone: sizes
// outside [k-1, k+1] have fixed values, k and k+1 are looked up, and a
// (k-1)-set is worth k-1 exactly when none of its (k+1)-supersets is worth
// k (no superset in B). nullopt when the needed sets are missing.
std::optional<Rational> DerivedValue(const CanonicalQuerySet& canonical,
                                     uint32_t mask);

// True if w answers every query in `queries` as `answers` does.
bool ConsistentWith(const HardSubmodularValuation& w,
                    const std::vector<ItemSet>& queries,
                    const std::vector<Rational>& answers);
bool ConsistentWith(const HardSubmodularValuation& w,
                    const CanonicalQuerySet& canonical);

}  // namespace primcx

#endif  // PRIMCX_HARDNESS_CANONICAL_FORM_H_
