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

#include "primcx/core/tie_policy.h"

#include <charconv>
#include <memory>
#include <optional>

#include "primcx/core/errors.h"
#include "primcx/core/rng.h"

namespace primcx {
namespace {

std::optional<uint64_t> ParseSuffix(std::string_view text,
                                    std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view digits = text.substr(prefix.size());
  uint64_t seed = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), seed);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      digits.empty()) {
    return std::nullopt;
  }
  return seed;
}

}  // namespace

TiePolicy TiePolicy::CyclingAdversary(uint64_t seed) {
  struct State {
    Rng rng;
    uint64_t calls = 0;
  };
  auto state = std::make_shared<State>(State{Rng(seed), 0});
  TieCallback callback = [state](std::span<const ItemSet> family,
                                 const PriceVector&) -> ItemSet {
    const size_t n = family.size();
    switch (state->calls++ % 4) {
      case 0:
        return family.front();
      case 1:
        return family.back();
      case 2:
        return family[state->rng.UniformInt(n)];
      default:
        return family[n / 2];
    }
  };
  return {Kind::kAdversarial, seed, std::move(callback)};
}

TiePolicy TiePolicy::Parse(std::string_view text) {
  if (text == "lexmin") return LexMin();
  if (text == "lexmax") return LexMax();
  if (auto seed = ParseSuffix(text, "random:")) return SeededRandom(*seed);
  if (auto seed = ParseSuffix(text, "adversarial:")) {
    return CyclingAdversary(*seed);
  }
  if (text == "random") return SeededRandom(0);
  throw ParseError("unknown tie policy '" + std::string(text) + "'");
}

std::string TiePolicy::Name() const {
  switch (kind) {
    case Kind::kLexMin:
      return "lexmin";
    case Kind::kLexMax:
      return "lexmax";
    case Kind::kSeededRandom:
      return "random:" + std::to_string(seed);
    case Kind::kAdversarial:
      return "adversarial:" + std::to_string(seed);
  }
  return "unknown";
}

}  // namespace primcx
