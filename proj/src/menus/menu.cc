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

#include "primcx/menus/menu.h"

#include <algorithm>
#include <string>

#include "primcx/core/errors.h"
#include "primcx/valuations/valuation_io.h"

namespace primcx {

BundleSizeMenu::BundleSizeMenu(std::vector<MenuEntry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const MenuEntry& a, const MenuEntry& b) { return a.size < b.size; });
  for (size_t i = 0; i < entries_.size(); ++i) {
    const MenuEntry& e = entries_[i];
    if (e.size < 1) throw DomainError("menu size must be at least 1");
    if (e.price.is_infinite() || e.price.sign() <= 0) {
      throw DomainError("menu price must be positive and finite, got " +
                        e.price.ToString());
    }
    if (i > 0) {
      if (entries_[i - 1].size == e.size) {
        throw DomainError("duplicate menu size " + std::to_string(e.size));
      }
      if (entries_[i - 1].price >= e.price) {
        throw DomainError("menu prices must increase with size");
      }
    }
  }
}

const Rational& BundleSizeMenu::MinPrice() const {
  if (empty()) throw DomainError("empty menu has no prices");
  return entries_.front().price;
}

const Rational& BundleSizeMenu::MaxPrice() const {
  if (empty()) throw DomainError("empty menu has no prices");
  return entries_.back().price;
}

Rational BundleSizeMenu::PriceRatio() const {
  if (empty()) return Rational(1);
  return MaxPrice() / MinPrice();
}

std::optional<Rational> BundleSizeMenu::PriceOf(int size) const {
  for (const MenuEntry& e : entries_) {
    if (e.size == size) return e.price;
  }
  return std::nullopt;
}

BundleSizeMenu BundleSizeMenu::Scaled(const Rational& factor) const {
  if (factor.is_infinite() || factor.sign() <= 0) {
    throw DomainError("menu scale factor must be positive");
  }
  std::vector<MenuEntry> scaled = entries_;
  for (MenuEntry& e : scaled) e.price *= factor;
  return BundleSizeMenu(std::move(scaled));
}

BundleSizeMenu BundleSizeMenu::WithoutSizesBelow(int min_size) const {
  std::vector<MenuEntry> kept;
  for (const MenuEntry& e : entries_) {
    if (e.size >= min_size) kept.push_back(e);
  }
  return BundleSizeMenu(std::move(kept));
}

nlohmann::json MenuToJson(const BundleSizeMenu& menu) {
  nlohmann::json entries = nlohmann::json::array();
  for (const MenuEntry& e : menu.entries()) {
    entries.push_back({{"size", e.size}, {"price", RationalToJson(e.price)}});
  }
  return {{"entries", entries}};
}

BundleSizeMenu MenuFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError("menu needs an 'entries' array");
  }
  std::vector<MenuEntry> entries;
  for (const nlohmann::json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("size") || !e.contains("price") ||
        !e["size"].is_number_integer()) {
      throw ParseError("menu entry needs integer 'size' and 'price'");
    }
    entries.push_back({e["size"].get<int>(), RationalFromJson(e["price"])});
  }
  try {
    return BundleSizeMenu(std::move(entries));
  } catch (const DomainError& error) {
    throw ParseError(error.what());
  }
}

}  // namespace primcx
