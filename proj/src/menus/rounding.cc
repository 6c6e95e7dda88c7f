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

#include "primcx/menus/rounding.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "primcx/core/errors.h"
#include "primcx/menus/exp_bounds.h"

namespace primcx {
namespace {

class PowerCache {
 public:
  explicit PowerCache(Rational base) : base_(std::move(base)) {}

  const Rational& Get(int exponent) {
    auto it = cache_.find(exponent);
    if (it == cache_.end()) {
      it = cache_.emplace(exponent, base_.Pow(exponent)).first;
    }
    return it->second;
  }

  // Smallest j >= 0 with base^j >= s, for s >= 1.
  int CeilLog(const Rational& s) {
    double estimate =
        std::log(s.ToDouble()) / std::log(base_.ToDouble());
    int j = std::isfinite(estimate)
                ? std::max(0, static_cast<int>(std::ceil(estimate)))
                : 0;
    while (j > 0 && Get(j - 1) >= s) --j;
    while (Get(j) < s) ++j;
    return j;
  }

 private:
  Rational base_;
  std::map<int, Rational> cache_;
};

}  // namespace

RoundedMenu RoundMenu(const BundleSizeMenu& menu, const Rational& eps) {
  if (eps.is_infinite() || eps.sign() <= 0) {
    throw DomainError("rounding needs eps > 0");
  }
  RoundedMenu out;
  out.base = Rational(1) + eps * eps / Rational(4);
  if (menu.empty() || eps >= Rational(1)) {
    out.scale = menu.empty() ? Rational(1) : menu.MinPrice();
    return out;
  }
  out.scale = menu.MinPrice();
  Rational factor = out.scale * (Rational(1) - eps / Rational(2));
  PowerCache powers(out.base);
  // Rounding is monotone, so equal rounded prices are adjacent; keep the
  // last (largest) size of each run.
  std::vector<MenuEntry> rounded;
  for (const MenuEntry& e : menu.entries()) {
    int j = powers.CeilLog(e.price / out.scale);
    Rational price = factor * powers.Get(j);
    if (!rounded.empty() && rounded.back().price == price) {
      rounded.back().size = e.size;
    } else {
      rounded.push_back({e.size, std::move(price)});
    }
  }
  out.menu = BundleSizeMenu(std::move(rounded));
  return out;
}

bool LevelCountWithinBound(int levels, const Rational& h,
                           const Rational& eps) {
  if (levels <= 2) return true;
  if (h <= Rational(1)) return false;
  // levels - 2 <= 5 ln(h) / eps^2  <=>  e^{(levels - 2) eps^2 / 5} <= h.
  Rational x = Rational(levels - 2) * eps * eps / Rational(5);
  return CompareExp(x, h) <= 0;
}

bool AdjacentRatiosAtLeast(const BundleSizeMenu& menu, const Rational& eps) {
  const auto& entries = menu.entries();
  if (entries.size() < 2) return true;
  Rational min_ratio = entries[1].price / entries[0].price;
  for (size_t i = 2; i < entries.size(); ++i) {
    Rational ratio = entries[i].price / entries[i - 1].price;
    if (ratio < min_ratio) min_ratio = std::move(ratio);
  }
  // ratio >= e^{eps^2/7}  <=>  ratio^7 >= e^{eps^2}.
  return CompareExp(eps * eps, min_ratio.Pow(7)) <= 0;
}

}  // namespace primcx
