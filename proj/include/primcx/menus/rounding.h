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

#ifndef PRIMCX_MENUS_ROUNDING_H_
#define PRIMCX_MENUS_ROUNDING_H_

#include "primcx/core/rational.h"
#include "primcx/menus/menu.h"

namespace primcx {

struct RoundedMenu {
  BundleSizeMenu menu;
  // Cheapest input price; the rounding acts on prices divided by it.
  Rational scale;
  // Geometric ratio between consecutive price levels.
  Rational base;
};

// Geometric price rounding. With s = price / scale >= 1 and
// base = 1 + eps^2/4, a price maps to
//   scale * (1 - eps/2) * base^j, j the smallest integer with base^j >= s,
// and among sizes sharing a rounded price only the largest is kept. For
// every valuation the seller-worst revenue drops by less than a factor
// 1 - eps, the output has at most 2 + (5/eps^2) ln H prices, and adjacent
// prices differ by a factor of at least base. eps >= 1 gives the empty menu.
// Throws DomainError unless eps > 0.
RoundedMenu RoundMenu(const BundleSizeMenu& menu, const Rational& eps);

// Exact checks of the two size guarantees of a rounded menu.
// levels <= 2 + (5/eps^2) ln h.
bool LevelCountWithinBound(int levels, const Rational& h, const Rational& eps);
// Every adjacent price ratio is >= e^{eps^2/7}. True for fewer than two
// prices.
bool AdjacentRatiosAtLeast(const BundleSizeMenu& menu, const Rational& eps);

}  // namespace primcx

#endif  // PRIMCX_MENUS_ROUNDING_H_
