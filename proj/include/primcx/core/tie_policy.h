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

#ifndef PRIMCX_CORE_TIE_POLICY_H_
#define PRIMCX_CORE_TIE_POLICY_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "primcx/core/item_set.h"
#include "primcx/core/price_vector.h"

namespace primcx {

// Receives every demanded set (colex order) and the prices that produced
// them; returns the one to answer with.
using TieCallback = std::function<ItemSet(std::span<const ItemSet> family,
                                          const PriceVector& prices)>;

// How a demand oracle picks among several profit-maximizing sets.
//
// kLexMin and kLexMax prefer, respectively, fewer and lower-indexed items or
// more and higher-indexed items. For additive valuations they are exactly
// the colex-least and colex-greatest demanded sets. kSeededRandom draws from
// a private stream keyed by `seed`. kAdversarial hands the full demanded
// family to `callback`, which requires that family to be enumerable.
struct TiePolicy {
  enum class Kind { kLexMin, kLexMax, kSeededRandom, kAdversarial };

  Kind kind = Kind::kLexMin;
  uint64_t seed = 0;
  TieCallback callback;

  static TiePolicy LexMin() { return {Kind::kLexMin, 0, nullptr}; }
  static TiePolicy LexMax() { return {Kind::kLexMax, 0, nullptr}; }
  static TiePolicy SeededRandom(uint64_t seed) {
    return {Kind::kSeededRandom, seed, nullptr};
  }
  static TiePolicy Adversarial(TieCallback callback) {
    return {Kind::kAdversarial, 0, std::move(callback)};
  }

  // An adversarial policy that rotates through four answers on successive
  // queries: the first family member, the last, a random one, and the
  // middle one. Each copy of the returned policy shares one rotation.
  static TiePolicy CyclingAdversary(uint64_t seed);

  // "lexmin", "lexmax", "random:<seed>", "adversarial:<seed>" (the cycling
  // adversary). Throws ParseError.
  static TiePolicy Parse(std::string_view text);
  std::string Name() const;
};

}  // namespace primcx

#endif  // PRIMCX_CORE_TIE_POLICY_H_
