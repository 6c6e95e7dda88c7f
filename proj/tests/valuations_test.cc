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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <vector>

#include "primcx/core/errors.h"
#include "primcx/core/rng.h"
#include "primcx/valuations/hard_submodular.h"
#include "primcx/valuations/matroid.h"
#include "primcx/valuations/valuation.h"
#include "primcx/valuations/valuation_io.h"
#include "primcx/valuations/weighted_matroid_rank.h"
#include "test_util.h"

namespace primcx {
namespace {

using ::primcx::testing::Additive;
using ::primcx::testing::Rationals;
using ::primcx::testing::Set;
using ::primcx::testing::Triangle;
using ::primcx::testing::UniformWmr;
using ::primcx::testing::Wmr;

// Independence tests written from the definitions, without builders.
bool UniformIndependent(int rank, uint64_t mask) {
  return std::popcount(mask) <= rank;
}

bool PartitionIndependent(const std::vector<int>& block_of,
                          const std::vector<int>& capacities, uint64_t mask) {
  std::vector<int> used(capacities.size(), 0);
  for (size_t i = 0; i < block_of.size(); ++i) {
    if ((mask >> i) & 1) ++used[block_of[i]];
  }
  for (size_t b = 0; b < used.size(); ++b) {
    if (used[b] > capacities[b]) return false;
  }
  return true;
}

// A forest has |E| = |V| - (number of components) on its touched vertices.
bool GraphicIndependent(int vertices,
                        const std::vector<std::pair<int, int>>& edges,
                        uint64_t mask) {
  std::vector<std::vector<int>> adjacent(vertices);
  int edge_count = 0;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    auto [a, b] = edges[i];
    if (a == b) return false;
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
    ++edge_count;
  }
  std::vector<bool> seen(vertices, false);
  int components = 0;
  for (int start = 0; start < vertices; ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<int> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adjacent[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return edge_count == vertices - components;
}

struct MatroidCase {
  std::shared_ptr<const Matroid> matroid;
  std::function<bool(uint64_t)> independent;
};

std::vector<MatroidCase> RandomMatroids(Rng& rng, int count) {
  std::vector<MatroidCase> cases;
  for (int i = 0; i < count; ++i) {
    const int m = 1 + static_cast<int>(rng.UniformInt(10));
    switch (i % 3) {
      case 0: {
        int rank = static_cast<int>(rng.UniformInt(m + 1));
        cases.push_back({std::make_shared<UniformMatroid>(m, rank),
                         [rank](uint64_t s) { return UniformIndependent(rank, s); }});
        break;
      }
      case 1: {
        int blocks = 1 + static_cast<int>(rng.UniformInt(4));
        std::vector<int> block_of(m), capacities(blocks);
        for (int& b : block_of) b = static_cast<int>(rng.UniformInt(blocks));
        for (int& c : capacities) c = static_cast<int>(rng.UniformInt(3));
        cases.push_back({std::make_shared<PartitionMatroid>(block_of, capacities),
                         [block_of, capacities](uint64_t s) {
                           return PartitionIndependent(block_of, capacities, s);
                         }});
        break;
      }
      default: {
        int vertices = 1 + static_cast<int>(rng.UniformInt(5));
        std::vector<std::pair<int, int>> edges(m);
        for (auto& e : edges) {
          e = {static_cast<int>(rng.UniformInt(vertices)),
               static_cast<int>(rng.UniformInt(vertices))};
        }
        cases.push_back({std::make_shared<GraphicMatroid>(vertices, edges),
                         [vertices, edges](uint64_t s) {
                           return GraphicIndependent(vertices, edges, s);
                         }});
        break;
      }
    }
  }
  return cases;
}

std::vector<Rational> RandomWeights(Rng& rng, int m) {
  std::vector<Rational> w(m);
  for (auto& x : w) x = Rational(static_cast<int64_t>(rng.UniformInt(4)), 2);
  return w;
}

Rational BruteForceWmr(const MatroidCase& c, const std::vector<Rational>& w,
                       uint64_t s) {
  Rational best;
  for (uint64_t sub = s;; sub = (sub - 1) & s) {
    if (c.independent(sub)) {
      Rational total;
      for (uint64_t r = sub; r != 0; r &= r - 1) total += w[std::countr_zero(r)];
      best = Max(best, total);
    }
    if (sub == 0) break;
  }
  return best;
}

TEST(AdditiveTest, SumOfMembers) {
  auto v = Additive({1, 2, 3});
  EXPECT_EQ(v->Value(Set(3, {0, 2})), Rational(4));
  EXPECT_EQ(v->Value(ItemSet(3)), Rational(0));
  EXPECT_EQ(v->SingletonValue(1), Rational(2));
}

TEST(AdditiveTest, RejectsNegativeAndInfiniteValues) {
  EXPECT_THROW(AdditiveValuation({Rational(-1)}), DomainError);
  EXPECT_THROW(AdditiveValuation({Rational::Infinity()}), DomainError);
}

TEST(AdditiveTest, MismatchedSetIsStructuralError) {
  EXPECT_THROW(Additive({1, 2})->Value(ItemSet(3)), StructuralError);
}

TEST(WmrTest, UniformRankTwo) {
  EXPECT_EQ(UniformWmr(2, {5, 3, 1})->Value(ItemSet::Full(3)), Rational(8));
}

TEST(WmrTest, TriangleSpanningTree) {
  auto v = Wmr(Triangle(), {4, 2, 1});
  EXPECT_EQ(v->Value(ItemSet::Full(3)), Rational(6));
  EXPECT_EQ(v->MaxWeightBasis(ItemSet::Full(3)), Set(3, {0, 1}));
}

TEST(MatroidTest, MatchesDefinitionsAndAxioms) {
  Rng rng(21);
  for (const MatroidCase& c : RandomMatroids(rng, 60)) {
    const int m = c.matroid->num_items();
    const uint64_t count = uint64_t{1} << m;
    std::vector<bool> indep(count);
    for (uint64_t s = 0; s < count; ++s) {
      indep[s] = c.independent(s);
      ASSERT_EQ(c.matroid->IsIndependent(ItemSet::FromMask(m, s)), indep[s])
          << c.matroid->type_name() << " " << s;
    }
    ASSERT_TRUE(indep[0]);
    for (uint64_t s = 0; s < count; ++s) {
      if (!indep[s]) continue;
      for (uint64_t r = s; r != 0; r &= r - 1) {
        ASSERT_TRUE(indep[s & ~(r & (~r + 1))]) << "downward closure";
      }
    }
    if (m > 8) continue;
    for (uint64_t a = 0; a < count; ++a) {
      if (!indep[a]) continue;
      for (uint64_t b = 0; b < count; ++b) {
        if (!indep[b] || std::popcount(b) <= std::popcount(a)) continue;
        bool exchange = false;
        for (uint64_t r = b & ~a; r != 0 && !exchange; r &= r - 1) {
          exchange = indep[a | (r & (~r + 1))];
        }
        ASSERT_TRUE(exchange) << "exchange";
      }
    }
  }
}

TEST(MatroidTest, RankMatchesLargestIndependentSubset) {
  Rng rng(22);
  for (const MatroidCase& c : RandomMatroids(rng, 30)) {
    const int m = c.matroid->num_items();
    for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) {
      int best = 0;
      for (uint64_t sub = s;; sub = (sub - 1) & s) {
        if (c.independent(sub)) best = std::max(best, std::popcount(sub));
        if (sub == 0) break;
      }
      ASSERT_EQ(c.matroid->Rank(ItemSet::FromMask(m, s)), best);
    }
  }
}

TEST(WmrTest, GreedyMatchesBruteForceOnAllSets) {
  Rng rng(23);
  for (const MatroidCase& c : RandomMatroids(rng, 45)) {
    const int m = c.matroid->num_items();
    std::vector<Rational> w = RandomWeights(rng, m);
    WeightedMatroidRankValuation v(c.matroid, w);
    for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) {
      ItemSet set = ItemSet::FromMask(m, s);
      ASSERT_EQ(v.Value(set), BruteForceWmr(c, w, s));
      ItemSet basis = v.MaxWeightBasis(set);
      ASSERT_TRUE(basis.IsSubsetOf(set));
      ASSERT_TRUE(c.independent(basis.ToMask()));
      ASSERT_EQ(v.Value(basis), v.Value(set));
    }
  }
}

TEST(WmrTest, AdditiveOnABasis) {
  Rng rng(24);
  for (const MatroidCase& c : RandomMatroids(rng, 30)) {
    const int m = c.matroid->num_items();
    WeightedMatroidRankValuation v(c.matroid, RandomWeights(rng, m));
    ItemSet basis = v.MaxWeightBasis(ItemSet::Full(m));
    for (int item : basis) {
      for (int other : basis) {
        if (other <= item) continue;
        ASSERT_EQ(v.Value(Set(m, {item, other})),
                  v.SingletonValue(item) + v.SingletonValue(other));
      }
    }
  }
}

TEST(ValuationTest, MonotoneOnNestedPairs) {
  Rng rng(25);
  for (const MatroidCase& c : RandomMatroids(rng, 30)) {
    const int m = c.matroid->num_items();
    WeightedMatroidRankValuation v(c.matroid, RandomWeights(rng, m));
    for (uint64_t t = 0; t < (uint64_t{1} << m); ++t) {
      Rational vt = v.Value(ItemSet::FromMask(m, t));
      for (uint64_t r = t; r != 0; r &= r - 1) {
        ASSERT_LE(v.Value(ItemSet::FromMask(m, t & ~(r & (~r + 1)))), vt);
      }
    }
  }
}

// The piecewise definition, evaluated from the raw families.
Rational HardTable(int m, const std::vector<uint32_t>& b, uint32_t g,
                   uint32_t s) {
  const int k = m / 2;
  const int size = std::popcount(s);
  auto in_b = [&](uint32_t x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  };
  auto covered = [&](uint32_t x) {
    return std::any_of(b.begin(), b.end(),
                       [x](uint32_t y) { return (x & y) == x; });
  };
  if (size > k + 1) return Rational(k);
  if (size == k + 1) return in_b(s) ? Rational(k) : Rational(11 * k - 3, 11);
  if (size == k) return s == g ? Rational(11 * k - 6, 11) : Rational(11 * k - 7, 11);
  if (size == k - 1) return covered(s) ? Rational(11 * k - 14, 11) : Rational(k - 1);
  return Rational(size);
}

TEST(HardSubmodularTest, GValue) {
  HardSubmodularValuation v(6, {0b001111}, 0b110001);
  EXPECT_EQ(v.Value(v.g()), Rational(27, 11));
  EXPECT_EQ(v.g(), Set(6, {0, 4, 5}));
}

TEST(HardSubmodularTest, RejectsMalformedFamilies) {
  EXPECT_THROW(HardSubmodularValuation(5, {}, 0b111), DomainError);
  EXPECT_THROW(HardSubmodularValuation(6, {0b111}, 0b111), StructuralError);
  EXPECT_THROW(HardSubmodularValuation(6, {0b1111}, 0b11), StructuralError);
  EXPECT_THROW(HardSubmodularValuation(6, {0b1111}, 0b111), StructuralError);
}

TEST(HardSubmodularTest, MatchesPiecewiseTable) {
  for (int m : {6, 8, 10}) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      HardSubmodularValuation v = SampleHardValuation(m, rng).valuation;
      for (uint32_t s = 0; s < (1u << m); ++s) {
        ASSERT_EQ(v.ValueOfMask(s), HardTable(m, v.b_family(), v.g_mask(), s));
        ASSERT_EQ(v.Value(ItemSet::FromMask(m, s)), v.ValueOfMask(s));
      }
    }
  }
}

TEST(HardSubmodularTest, SampleShapes) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    HardSample sample = SampleHardValuation(6, rng);
    const HardSubmodularValuation& v = sample.valuation;
    EXPECT_EQ(std::popcount(v.g_mask()), 3);
    for (uint32_t b : v.b_family()) {
      EXPECT_EQ(std::popcount(b), 4);
      EXPECT_NE(v.g_mask() & b, v.g_mask());
    }
  }
}

TEST(HardSubmodularTest, InclusionRateIsOneOverMSquared) {
  const int trials = 10000;
  int hits = 0;
  for (int seed = 0; seed < trials; ++seed) {
    Rng rng(seed);
    if (SampleHardValuation(6, rng).valuation.InB(0b001111)) ++hits;
  }
  const double p = 1.0 / 36;
  const double sigma = std::sqrt(p * (1 - p) * trials);
  EXPECT_NEAR(hits, p * trials, 3 * sigma);
}

TEST(HardSubmodularTest, GUniformOverEligibleSets) {
  // With an empty family every 2-subset of 4 items is eligible.
  std::vector<int> counts(16, 0);
  int empty = 0;
  for (int seed = 0; seed < 12000; ++seed) {
    Rng rng(seed);
    HardSubmodularValuation v = SampleHardValuation(4, rng).valuation;
    if (!v.b_family().empty()) continue;
    ++empty;
    ++counts[v.g_mask()];
  }
  std::vector<int> observed;
  for (uint32_t g = 0; g < 16; ++g) {
    if (std::popcount(g) == 2) observed.push_back(counts[g]);
  }
  // 5 degrees of freedom; 20.52 is the 0.999 quantile.
  EXPECT_GT(empty, 1000);
  EXPECT_LT(testing::ChiSquareUniform(observed), 20.52);
}

TEST(HardSubmodularTest, GIsUniqueKOptimal) {
  for (int m : {6, 8, 10}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      HardSubmodularValuation v = SampleHardValuation(m, rng).valuation;
      int best_count = 0;
      uint32_t best = 0;
      ForEachSubsetOfSize(m, m / 2, [&](uint64_t s) {
        Rational x = v.ValueOfMask(static_cast<uint32_t>(s));
        if (x == Rational(11 * (m / 2) - 6, 11)) {
          ++best_count;
          best = static_cast<uint32_t>(s);
        } else {
          EXPECT_EQ(x, Rational(11 * (m / 2) - 7, 11));
        }
      });
      EXPECT_EQ(best_count, 1);
      EXPECT_EQ(best, v.g_mask());
    }
  }
}

TEST(HardSubmodularTest, OddOrLargeMIsDomainError) {
  Rng rng(1);
  EXPECT_THROW(SampleHardValuation(7, rng), DomainError);
  EXPECT_THROW(SampleHardValuation(26, rng), DomainError);
}

class PairComplement : public Valuation {
 public:
  int num_items() const override { return 2; }
  ValuationKind kind() const override { return ValuationKind::kGeneral; }
  Rational Value(const ItemSet& s) const override {
    return s.size() == 2 ? Rational(1) : Rational(0);
  }
};

TEST(VerifySubmodularTest, Examples) {
  EXPECT_TRUE(VerifySubmodular(*Additive({1, 4, 2, 0, 7})));
  EXPECT_FALSE(VerifySubmodular(PairComplement()));
  for (int m : {6, 8, 10}) {
    Rng rng(m);
    EXPECT_TRUE(VerifySubmodular(SampleHardValuation(m, rng).valuation));
  }
}

TEST(ValuationIoTest, RoundTrips) {
  auto additive = std::make_shared<AdditiveValuation>(
      std::vector<Rational>{Rational(1, 3), Rational(2), Rational(0)});
  auto partition = Wmr(std::make_shared<PartitionMatroid>(
                           std::vector<int>{0, 0, 1}, std::vector<int>{1, 1}),
                       {5, 3, 1});
  auto graphic = Wmr(Triangle(), {4, 2, 1});
  auto uniform = UniformWmr(2, {5, 3, 1});
  auto hard = std::make_shared<HardSubmodularValuation>(
      6, std::vector<uint32_t>{0b001111}, 0b110001);
  for (std::shared_ptr<const Valuation> v :
       std::vector<std::shared_ptr<const Valuation>>{additive, partition,
                                                     graphic, uniform, hard}) {
    nlohmann::json j = ValuationToJson(*v);
    std::shared_ptr<const Valuation> back =
        ValuationFromJson(nlohmann::json::parse(j.dump()));
    ASSERT_EQ(back->kind(), v->kind());
    EXPECT_EQ(ValuationToJson(*back), j);
    for (uint64_t s = 0; s < (uint64_t{1} << v->num_items()); ++s) {
      ItemSet set = ItemSet::FromMask(v->num_items(), s);
      EXPECT_EQ(back->Value(set), v->Value(set));
    }
  }
}

TEST(ValuationIoTest, DocumentedForms) {
  auto v = ValuationFromJson(nlohmann::json::parse(
      R"({"type":"additive","values":["1/1","2/1","3/1"]})"));
  EXPECT_EQ(v->Value(Set(3, {0, 2})), Rational(4));
  auto h = ValuationFromJson(nlohmann::json::parse(
      R"({"type":"hardsub","m":6,"B":[[0,1,2,3]],"G":[0,4,5]})"));
  EXPECT_EQ(h->Value(Set(6, {0, 4, 5})), Rational(27, 11));
  EXPECT_EQ(RationalToJson(Rational(27, 11)), "27/11");
  EXPECT_EQ(ItemSetToJson(Set(4, {3, 1})), nlohmann::json::parse("[1,3]"));
}

TEST(ValuationIoTest, MalformedInputIsParseError) {
  for (const char* text :
       {R"({"type":"additive"})", R"({"type":"nope","values":[]})",
        R"({"type":"additive","values":["x"]})",
        R"({"type":"wmr","matroid":{"type":"uniform","m":2,"rank":1},"weights":["1/1"]})",
        R"({"type":"hardsub","m":6,"B":[[0,9,2,3]],"G":[0,4,5]})"}) {
    EXPECT_ANY_THROW(ValuationFromJson(nlohmann::json::parse(text))) << text;
  }
}

}  // namespace
}  // namespace primcx
