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

#ifndef PRIMCX_MENUS_MENU_H_
#define PRIMCX_MENUS_MENU_H_

#include <optional>
#include <vector>

#include "json.hpp"
#include "primcx/core/rational.h"

namespace primcx {

struct MenuEntry {
  int size;
  Rational price;

  friend bool operator==(const MenuEntry&, const MenuEntry&) = default;
};

// A bundle-size pricing menu: the price of any bundle depends only on its
// size. The empty bundle is always available for free and is not listed.
// Entries are kept sorted by size; sizes are distinct and at least 1,
// prices are positive and strictly increase with size.
class BundleSizeMenu {
 public:
  BundleSizeMenu() = default;
  // Sorts by size and validates. Throws DomainError.
  explicit BundleSizeMenu(std::vector<MenuEntry> entries);

  const std::vector<MenuEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int num_entries() const { return static_cast<int>(entries_.size()); }
  int max_size() const { return empty() ? 0 : entries_.back().size; }

  // Cheapest and dearest prices. Throw DomainError on an empty menu.
  const Rational& MinPrice() const;
  const Rational& MaxPrice() const;
  // H: max price over min price, 1 for an empty menu.
  Rational PriceRatio() const;
  std::optional<Rational> PriceOf(int size) const;

  // Every price multiplied by a positive factor.
  BundleSizeMenu Scaled(const Rational& factor) const;
  // Entries with size >= min_size.
  BundleSizeMenu WithoutSizesBelow(int min_size) const;

  friend bool operator==(const BundleSizeMenu&, const BundleSizeMenu&) =
      default;

 private:
  std::vector<MenuEntry> entries_;
};

// {"entries":[{"size":1,"price":"1/1"},...]}. Throws ParseError.
nlohmann::json MenuToJson(const BundleSizeMenu& menu);
BundleSizeMenu MenuFromJson(const nlohmann::json& j);

}  // namespace primcx

#endif  // PRIMCX_MENUS_MENU_H_
