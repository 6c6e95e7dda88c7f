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

#ifndef PRIMCX_TESTS_TEST_UTIL_H_
#define PRIMCX_TESTS_TEST_UTIL_H_

#include <memory>
#include <vector>

#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/core/tie_policy.h"
#include "primcx/valuations/matroid.h"
#include "primcx/valuations/valuation.h"
#include "primcx/valuations/weighted_matroid_rank.h"

namespace primcx::testing {

inline std::vector<Rational> Rationals(const std::vector<int64_t>& values) {
  return {values.begin(), values.end()};
}

inline std::shared_ptr<AdditiveValuation> Additive(
    const std::vector<int64_t>& values) {
  return std::make_shared<AdditiveValuation>(Rationals(values));
}

inline std::shared_ptr<WeightedMatroidRankValuation> Wmr(
    std::shared_ptr<const Matroid> matroid, const std::vector<int64_t>& w) {
  return std::make_shared<WeightedMatroidRankValuation>(std::move(matroid),
                                                        Rationals(w));
}

inline std::shared_ptr<WeightedMatroidRankValuation> UniformWmr(
    int rank, const std::vector<int64_t>& w) {
  return Wmr(std::make_shared<UniformMatroid>(static_cast<int>(w.size()), rank),
             w);
}

// The triangle on vertices 0, 1, 2 with edges 01, 12, 02.
inline std::shared_ptr<GraphicMatroid> Triangle() {
  return std::make_shared<GraphicMatroid>(
      3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
}

inline ItemSet Set(int m, std::initializer_list<int> items) {
  return ItemSet(m, items);
}

// Pearson chi-square statistic of observed counts against a uniform law.
inline double ChiSquareUniform(const std::vector<int>& counts) {
  double total = 0;
  for (int c : counts) total += c;
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (int c : counts) stat += (c - expected) * (c - expected) / expected;
  return stat;
}

inline std::vector<TiePolicy> AllPolicies(uint64_t seed) {
  return {TiePolicy::LexMin(), TiePolicy::LexMax(),
          TiePolicy::SeededRandom(seed), TiePolicy::CyclingAdversary(seed)};
}

// Values on the grid {0, 1/2, 1, 3/2}.
inline std::shared_ptr<AdditiveValuation> GridAdditive(Rng& rng, int m) {
  std::vector<Rational> values(m);
  for (auto& x : values) {
    x = Rational(static_cast<int64_t>(rng.UniformInt(4)), 2);
  }
  return std::make_shared<AdditiveValuation>(values);
}

// Weights in {0, 1/3, ..., 4/3}, so duplicates are common.
inline std::vector<Rational> RandomThirds(Rng& rng, int m) {
  std::vector<Rational> w(m);
  for (auto& x : w) x = Rational(static_cast<int64_t>(rng.UniformInt(5)), 3);
  return w;
}

inline std::shared_ptr<WeightedMatroidRankValuation> RandomPartitionWmr(
    Rng& rng, int m) {
  std::vector<int> block_of(m), caps(1 + rng.UniformInt(4));
  for (int& b : block_of) b = static_cast<int>(rng.UniformInt(caps.size()));
  for (int& c : caps) c = static_cast<int>(rng.UniformInt(3));
  return std::make_shared<WeightedMatroidRankValuation>(
      std::make_shared<PartitionMatroid>(block_of, caps), RandomThirds(rng, m));
}

inline std::shared_ptr<WeightedMatroidRankValuation> RandomUniformWmr(
    Rng& rng, int m) {
  const int rank = static_cast<int>(rng.UniformInt(m + 1));
  return std::make_shared<WeightedMatroidRankValuation>(
      std::make_shared<UniformMatroid>(m, rank), RandomThirds(rng, m));
}

// m random edges (loops and parallel edges allowed) on up to five vertices.
inline std::shared_ptr<WeightedMatroidRankValuation> RandomGraphicWmr(
    Rng& rng, int m) {
  const int vertices = 1 + static_cast<int>(rng.UniformInt(5));
  std::vector<std::pair<int, int>> edges(m);
  for (auto& [a, b] : edges) {
    a = static_cast<int>(rng.UniformInt(vertices));
    b = static_cast<int>(rng.UniformInt(vertices));
  }
  return std::make_shared<WeightedMatroidRankValuation>(
      std::make_shared<GraphicMatroid>(vertices, edges), RandomThirds(rng, m));
}

inline std::shared_ptr<WeightedMatroidRankValuation> RandomWmr(Rng& rng,
                                                               int m) {
  switch (rng.UniformInt(3)) {
    case 0:
      return RandomUniformWmr(rng, m);
    case 1:
      return RandomPartitionWmr(rng, m);
    default:
      return RandomGraphicWmr(rng, m);
  }
}

}  // namespace primcx::testing

#endif  // PRIMCX_TESTS_TEST_UTIL_H_
