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

#include "primcx/experiments/instances.h"

#include <algorithm>
#include <utility>

#include "primcx/core/errors.h"
#include "primcx/valuations/hard_submodular.h"
#include "primcx/valuations/matroid.h"
#include "primcx/valuations/weighted_matroid_rank.h"

namespace primcx {
namespace {

int Draw(Rng& rng, int n) {
  return static_cast<int>(rng.UniformInt(static_cast<uint64_t>(n)));
}

std::shared_ptr<const Matroid> MakeMatroid(std::string_view cls, int m,
                                           bool large, Rng& rng) {
  if (cls == "wmr-uniform") {
    const int rank = large ? 1 + Draw(rng, m) : Draw(rng, m + 1);
    return std::make_shared<UniformMatroid>(m, rank);
  }
  if (cls == "wmr-partition") {
    const int blocks = large ? std::max(1, m / 8) : 1 + Draw(rng, 4);
    std::vector<int> block_of(m), caps(blocks);
    for (int& b : block_of) b = Draw(rng, blocks);
    for (int& c : caps) c = large ? 1 + Draw(rng, 8) : Draw(rng, 3);
    return std::make_shared<PartitionMatroid>(std::move(block_of),
                                              std::move(caps));
  }
  const int vertices = large ? (m + 3) / 4 + 1 : 1 + Draw(rng, 5);
  std::vector<std::pair<int, int>> edges(m);
  for (auto& [a, b] : edges) {
    a = Draw(rng, vertices);
    b = Draw(rng, vertices);
  }
  return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
}

}  // namespace

void CheckClassName(std::string_view cls) {
  if (cls == "additive" || cls == "hard" || IsWmrClass(cls)) return;
  throw ParseError("unknown valuation class: " + std::string(cls));
}

bool IsWmrClass(std::string_view cls) {
  return cls == "wmr-uniform" || cls == "wmr-partition" ||
         cls == "wmr-graphic";
}

std::shared_ptr<const Valuation> ScalingInstance(std::string_view cls, int m,
                                                 Rng& rng) {
  CheckClassName(cls);
  if (cls == "hard") {
    return std::make_shared<HardSubmodularValuation>(
        SampleHardValuation(m, rng).valuation);
  }
  std::vector<Rational> w(m);
  for (Rational& x : w) x = Rational(rng.UniformRange(1, int64_t{1} << 20));
  if (cls == "additive") return std::make_shared<AdditiveValuation>(w);
  return std::make_shared<WeightedMatroidRankValuation>(
      MakeMatroid(cls, m, /*large=*/true, rng), std::move(w));
}

std::shared_ptr<const Valuation> CorpusInstance(std::string_view cls, int m,
                                                Rng& rng) {
  CheckClassName(cls);
  if (cls == "hard") {
    return std::make_shared<HardSubmodularValuation>(
        SampleHardValuation(m, rng).valuation);
  }
  std::vector<Rational> w(m);
  if (cls == "additive") {
    for (Rational& x : w) x = Rational(Draw(rng, 4), 2);
    return std::make_shared<AdditiveValuation>(std::move(w));
  }
  for (Rational& x : w) x = Rational(Draw(rng, 5), 3);
  return std::make_shared<WeightedMatroidRankValuation>(
      MakeMatroid(cls, m, /*large=*/false, rng), std::move(w));
}

PriceVector CorpusPrices(int m, Rng& rng) {
  std::vector<Rational> dense(m);
  for (Rational& p : dense) {
    const int r = Draw(rng, 9);
    p = r == 8 ? Rational::Infinity() : Rational(r, 2);
  }
  return PriceVector::Dense(dense);
}

}  // namespace primcx
