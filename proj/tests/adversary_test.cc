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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "primcx/adversary/adversary.h"
#include "primcx/adversary/duel.h"
#include "primcx/adversary/rational_matrix.h"
#include "primcx/core/errors.h"
#include "primcx/core/rng.h"
#include "primcx/oracles/counted_oracle.h"
#include "test_util.h"

namespace primcx {
namespace {

using testing::Set;

RationalMatrix Matrix(const std::vector<std::vector<int64_t>>& rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) r.push_back(testing::Rationals(row));
  return RationalMatrix::FromRows(r, static_cast<int>(rows[0].size()));
}

// Reference determinant by cofactor expansion.
Rational Determinant(const std::vector<std::vector<Rational>>& a) {
  const size_t n = a.size();
  if (n == 0) return Rational(1);
  Rational total(0);
  for (size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      minor.push_back(row);
    }
    Rational term = a[0][c] * Determinant(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// Reference rank: the largest k with a non-zero k x k minor.
int RankByMinors(const RationalMatrix& a) {
  int best = 0;
  const int rows = a.rows(), cols = a.cols();
  for (uint32_t rmask = 1; rmask < (1u << rows); ++rmask) {
    for (uint32_t cmask = 1; cmask < (1u << cols); ++cmask) {
      const int k = __builtin_popcount(rmask);
      if (k != __builtin_popcount(cmask) || k <= best) continue;
      std::vector<std::vector<Rational>> sub;
      for (int r = 0; r < rows; ++r) {
        if (!(rmask >> r & 1)) continue;
        std::vector<Rational> row;
        for (int c = 0; c < cols; ++c) {
          if (cmask >> c & 1) row.push_back(a.at(r, c));
        }
        sub.push_back(row);
      }
      if (!Determinant(sub).is_zero()) best = k;
    }
  }
  return best;
}

// Reference demand check by enumerating every finitely priced bundle in
// Gray-code order.
bool DemandIsOptimalByEnumeration(const AdversaryQuery& q,
                                  const AdditiveValuation& v) {
  const Rational paid = q.prices.PriceOf(q.set);
  if (paid.is_infinite()) return false;
  const Rational profit = v.Value(q.set) - paid;
  std::vector<Rational> gain;
  q.prices.ForEachFinite([&](int j, const Rational& p) {
    gain.push_back(v.values()[j] - p);
  });
  const uint64_t n = gain.size();
  Rational current(0);
  uint64_t gray = 0;
  for (uint64_t i = 1; i < (uint64_t{1} << n); ++i) {
    const int bit = __builtin_ctzll(i);
    gray ^= uint64_t{1} << bit;
    if (gray >> bit & 1) {
      current += gain[bit];
    } else {
      current -= gain[bit];
    }
    if (current > profit) return false;
  }
  return true;
}

bool ReplaysByEnumeration(const std::vector<AdversaryQuery>& transcript,
                          const AdditiveValuation& v) {
  for (const AdversaryQuery& q : transcript) {
    if (v.Value(q.set) != q.value) return false;
    if (q.kind == AdversaryQuery::Kind::kDemand &&
        !DemandIsOptimalByEnumeration(q, v)) {
      return false;
    }
  }
  return true;
}

RationalVector Scaled(const std::vector<int64_t>& xs, const Rational& eps) {
  RationalVector out;
  for (int64_t x : xs) out.push_back(Rational(x) * eps);
  return out;
}

TEST(RationalMatrixTest, ReducedRowEchelonOfKnownMatrix) {
  RationalMatrix a = Matrix({{0, 2, 4}, {1, 1, 1}, {1, 2, 3}});
  RowEchelon e = a.ReducedRowEchelon();
  EXPECT_EQ(e.pivot_columns, (std::vector<int>{0, 1}));
  EXPECT_EQ(e.reduced, Matrix({{1, 0, -1}, {0, 1, 2}}));
  EXPECT_EQ(a.Rank(), 2);
  std::optional<RationalVector> k = a.KernelVector();
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, testing::Rationals({1, -2, 1}));
}

TEST(RationalMatrixTest, FullColumnRankHasNoKernel) {
  RationalMatrix a = Matrix({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(a.Rank(), 2);
  EXPECT_FALSE(a.KernelVector().has_value());
  EXPECT_TRUE(a.KernelBasis().empty());
}

TEST(RationalMatrixTest, RejectsRaggedRows) {
  RationalMatrix a(0, 3);
  EXPECT_THROW(a.AppendRow(testing::Rationals({1, 2})), DomainError);
  EXPECT_THROW(a.Multiply(testing::Rationals({1})), DomainError);
}

TEST(RationalMatrixTest, RankAndKernelMatchReferenceOnRandomMatrices) {
  Rng rng(71);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = 1 + static_cast<int>(rng.UniformInt(4));
    const int cols = 1 + static_cast<int>(rng.UniformInt(5));
    RationalMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        a.at(r, c) = Rational(rng.UniformRange(-2, 2),
                              1 + static_cast<int64_t>(rng.UniformInt(3)));
      }
    }
    const int rank = a.Rank();
    ASSERT_EQ(rank, RankByMinors(a)) << a.ToString();
    std::vector<RationalVector> basis = a.KernelBasis();
    ASSERT_EQ(static_cast<int>(basis.size()), cols - rank);
    for (const RationalVector& k : basis) {
      EXPECT_EQ(a.Multiply(k), RationalVector(rows, Rational(0)));
    }
    // The reduced form is unique: row swaps do not change it.
    if (rows >= 2) {
      RationalMatrix swapped(0, cols);
      for (int r = rows - 1; r >= 0; --r) swapped.AppendRow(a.Row(r));
      EXPECT_EQ(swapped.ReducedRowEchelon().reduced,
                a.ReducedRowEchelon().reduced);
    }
  }
}

TEST(BfsSolveTest, SingleRowCollapsesToOneItem) {
  const Rational eps(1, 3);
  RationalMatrix a = Matrix({{1, 1, 1, 1}});
  std::optional<RationalVector> r =
      BfsSolve(a, {Rational(4) * eps}, RationalVector(4, eps));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, Scaled({4, 0, 0, 0}, eps));
}

TEST(BfsSolveTest, TwoOverlappingRows) {
  const Rational eps(1, 5);
  RationalMatrix a = Matrix({{1, 1, 0}, {0, 1, 1}});
  const RationalVector b = {Rational(2) * eps, Rational(2) * eps};
  std::optional<RationalVector> r = BfsSolve(a, b, RationalVector(3, eps));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(a.Multiply(*r), b);
  int support = 0;
  for (const Rational& x : *r) {
    EXPECT_GE(x.sign(), 0);
    support += !x.is_zero();
  }
  EXPECT_LE(support, 2);
}

TEST(BfsSolveTest, PinnedVariablesKeepTheUniqueSolution) {
  RationalMatrix a = Matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const RationalVector b = testing::Rationals({2, 0, 5});
  std::optional<RationalVector> r = BfsSolve(a, b, b);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, b);
}

TEST(BfsSolveTest, RejectsInfeasibleStart) {
  RationalMatrix a = Matrix({{1, 1}});
  EXPECT_FALSE(BfsSolve(a, {Rational(2)}, testing::Rationals({3, -1})));
  EXPECT_FALSE(BfsSolve(a, {Rational(2)}, testing::Rationals({1, 0})));
}

TEST(BfsSolveTest, RandomZeroOneSystemsMeetThePostconditions) {
  Rng rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng.UniformInt(5));
    const int cols = 1 + static_cast<int>(rng.UniformInt(9));
    RationalMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) a.at(r, c) = Rational(rng.Coin() ? 1 : 0);
    }
    RationalVector start(cols);
    for (Rational& x : start) {
      x = Rational(static_cast<int64_t>(rng.UniformInt(4)), 3);
    }
    const RationalVector b = a.Multiply(start);
    std::optional<RationalVector> r = BfsSolve(a, b, start);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(a.Multiply(*r), b);
    int support = 0;
    for (const Rational& x : *r) {
      ASSERT_GE(x.sign(), 0);
      support += !x.is_zero();
    }
    EXPECT_LE(support, a.Rank());
  }
}

TEST(AdversaryTest, FreshState) {
  AdversaryState st(4);
  EXPECT_EQ(st.eps(), Rational(1));
  EXPECT_EQ(st.ConstraintMatrix(), Matrix({{1, 1, 1, 1}}));
  EXPECT_EQ(st.num_committed(), 0);
  EXPECT_EQ(st.Value(ItemSet::Full(4)), Rational(4));
  EXPECT_EQ(st.Value(Set(4, {1, 2})), Rational(2));
  EXPECT_EQ(st.Value(ItemSet(4)), Rational(0));
  EXPECT_EQ(st.rows().size(), 3u);  // The empty set adds no row.
  EXPECT_THROW(AdversaryState(1), DomainError);
}

TEST(AdversaryTest, DemandCommitsAtMostTheRowCount) {
  AdversaryState st(4);
  const Rational price(1, 2);
  DemandResult d = st.Demand(PriceVector::Uniform(4, price));
  EXPECT_EQ(st.num_committed(), 1);
  EXPECT_LT(st.eps() * Rational(4), price);
  for (int j : d.set) EXPECT_TRUE(st.committed()[j].has_value());
  for (int j : st.Uncommitted()) EXPECT_LT(st.Witness()->Value(Set(4, {j})),
                                           price / Rational(4));
  // A committed item answers with its committed value.
  const int j = d.set.size() > 0 ? *d.set.begin() : 0;
  if (st.committed()[j]) {
    EXPECT_EQ(st.Value(Set(4, {j})), *st.committed()[j]);
  }
}

TEST(AdversaryTest, EpsStrictlyDecreasesAndRowsStayOnFreeItems) {
  AdversaryState st(9);
  Rng rng(73);
  Rational last = st.eps();
  for (int q = 0; q < 4; ++q) {
    st.Value(ItemSet::FromMask(9, rng.UniformInt(512)));
    st.Demand(PriceVector::Uniform(9, Rational(1, 1 + q)));
    EXPECT_LT(st.eps(), last);
    EXPECT_GT(st.eps().sign(), 0);
    last = st.eps();
    for (const ItemSet& row : st.rows()) {
      EXPECT_GT(row.size(), 0);
      for (int j : row) EXPECT_FALSE(st.committed()[j].has_value());
    }
  }
}

TEST(AdversaryTest, AnswersAreDeterministic) {
  auto run = [] {
    AdversaryState st(6);
    std::vector<Rational> out;
    out.push_back(st.Value(Set(6, {0, 3})));
    DemandResult d = st.Demand(PriceVector::Uniform(6, Rational(1, 5)));
    out.push_back(d.value);
    d = st.Demand(PriceVector::Uniform(6, Rational(1, 5)));
    out.push_back(d.value);
    return std::make_pair(out, st.Witness()->values());
  };
  EXPECT_EQ(run(), run());
}

TEST(AdversaryTest, ZeroPricesUseOneExtraValueQuery) {
  AdversaryOracle oracle(5);
  PriceVector p = PriceVector::Uniform(5, Rational(1, 3));
  p.Set(2, Rational(0));
  p.Set(4, Rational(0));
  DemandResult d = oracle.Demand(p);
  EXPECT_TRUE(d.set.Contains(2));
  EXPECT_TRUE(d.set.Contains(4));
  EXPECT_EQ(oracle.ledger().demand_queries, 1);
  EXPECT_EQ(oracle.ledger().value_queries, 1);
  EXPECT_TRUE(ReplayTranscript(oracle.state().transcript(),
                               *oracle.state().Witness())
                  .ok);
}

TEST(AdversaryTest, ExhaustedStateStillAnswersConsistently) {
  AdversaryState st(2);
  while (!st.exhausted()) st.Demand(PriceVector::Uniform(2, Rational(1, 7)));
  DemandResult d = st.Demand(PriceVector::Uniform(2, Rational(1, 7)));
  EXPECT_TRUE(ReplayTranscript(st.transcript(), *st.Witness()).ok);
  EXPECT_EQ(d.value, st.Witness()->Value(d.set));
  EXPECT_FALSE(FindAmbiguityCertificate(st).has_value());
}

TEST(CertificateTest, FreshStateIsAmbiguous) {
  AdversaryState st(4);
  std::optional<AmbiguityCertificate> cert = FindAmbiguityCertificate(st);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ((cert->min_items_x & cert->min_items_y).size(), 0);
  for (const Rational& v : cert->x->values()) EXPECT_GT(v.sign(), 0);
  for (const Rational& v : cert->y->values()) EXPECT_GT(v.sign(), 0);
  // Kernel of the all-ones row: first free column set to 1.
  EXPECT_EQ(cert->direction, testing::Rationals({-1, 1, 0, 0}));
  EXPECT_EQ(cert->delta, Rational(1, 2));
  EXPECT_TRUE(ReplaysByEnumeration(st.transcript(), *cert->x));
  EXPECT_TRUE(ReplaysByEnumeration(st.transcript(), *cert->y));
}

TEST(CertificateTest, NoneOnceConstraintsPinAllButOne) {
  AdversaryState st(4);
  st.Value(Set(4, {0}));
  st.Value(Set(4, {1}));
  EXPECT_EQ(st.Rank(), 3);
  EXPECT_FALSE(FindAmbiguityCertificate(st).has_value());
  AdversaryState other(4);
  other.Value(Set(4, {0}));
  EXPECT_EQ(other.Rank(), 2);
  EXPECT_TRUE(FindAmbiguityCertificate(other).has_value());
}

// Random interleavings of at most floor(sqrt m) - 1 value and demand
// queries, the base-case v(M) = m counting as the first value query.
void CheckRandomMixedQueries(int m, int trials, uint64_t seed,
                             bool enumerate) {
  Rng rng(seed);
  const int q = static_cast<int>(std::sqrt(static_cast<double>(m))) - 1;
  for (int trial = 0; trial < trials; ++trial) {
    AdversaryOracle oracle(m);
    int values = 1, demands = 0;
    while (values < q || demands < q) {
      const bool value = demands == q || (values < q && rng.Coin());
      if (value) {
        ItemSet s(m);
        for (int j = 0; j < m; ++j) {
          if (rng.Bernoulli(1, 2)) s.Insert(j);
        }
        oracle.Value(s);
        ++values;
      } else {
        std::vector<Rational> prices(m);
        for (Rational& p : prices) {
          p = Rational(1 + static_cast<int64_t>(rng.UniformInt(8)),
                       1 + static_cast<int64_t>(rng.UniformInt(64)));
        }
        oracle.Demand(PriceVector::Dense(prices));
        ++demands;
      }
      const AdversaryState& st = oracle.state();
      ASSERT_TRUE(ReplayTranscript(st.transcript(), *st.Witness()).ok);
      std::optional<AmbiguityCertificate> cert = FindAmbiguityCertificate(st);
      ASSERT_TRUE(cert.has_value()) << "m=" << m << " trial=" << trial
                                    << " rank=" << st.Rank() << " L="
                                    << st.num_committed() << " v=" << values
                                    << " d=" << demands;
      EXPECT_EQ((cert->min_items_x & cert->min_items_y).size(), 0);
      ASSERT_TRUE(ReplayTranscript(st.transcript(), *cert->x).ok);
      ASSERT_TRUE(ReplayTranscript(st.transcript(), *cert->y).ok);
      if (enumerate) {
        ASSERT_TRUE(ReplaysByEnumeration(st.transcript(), *cert->x));
        ASSERT_TRUE(ReplaysByEnumeration(st.transcript(), *cert->y));
      }
    }
    EXPECT_EQ(oracle.ledger().value_queries, q - 1);
    EXPECT_EQ(oracle.ledger().demand_queries, q);
  }
}

TEST(CertificateTest, SurvivesMixedQueriesExhaustiveAtSixteen) {
  CheckRandomMixedQueries(16, 40, 74, /*enumerate=*/true);
}

TEST(CertificateTest, SurvivesMixedQueriesAtLargerM) {
  CheckRandomMixedQueries(64, 40, 75, /*enumerate=*/false);
  CheckRandomMixedQueries(256, 4, 76, /*enumerate=*/false);
}

TEST(ReplayTest, DetectsWrongAnswers) {
  AdversaryState st(4);
  st.Value(Set(4, {0, 1}));
  st.Demand(PriceVector::Uniform(4, Rational(1, 2)));
  std::vector<Rational> wrong = st.Witness()->values();
  wrong[3] += Rational(1);
  ReplayReport r = ReplayTranscript(st.transcript(), AdditiveValuation(wrong));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.first_mismatch, 0);  // The implicit v(M) = m answer.
}

TEST(ReplayTest, RejectsSuboptimalDemandAnswers) {
  AdditiveValuation v(testing::Rationals({3, 1, 2}));
  const PriceVector p = PriceVector::Uniform(3, Rational(3, 2));
  AdversaryQuery good{AdversaryQuery::Kind::kDemand, Set(3, {0, 2}), p,
                      Rational(5)};
  AdversaryQuery bad{AdversaryQuery::Kind::kDemand, Set(3, {0}), p,
                     Rational(3)};
  EXPECT_TRUE(ReplayTranscript({good}, v).ok);
  EXPECT_TRUE(DemandIsOptimalByEnumeration(good, v));
  EXPECT_FALSE(ReplayTranscript({bad}, v).ok);
  EXPECT_FALSE(DemandIsOptimalByEnumeration(bad, v));
}

TEST(DuelTest, PivotSelectFindsTheMinimumOnHonestOracles) {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> values(8);
    for (Rational& v : values) {
      v = Rational(1 + static_cast<int64_t>(rng.UniformInt(20)));
    }
    CountedOracle oracle(std::make_shared<AdditiveValuation>(values));
    const int guess = PivotSelectMin(oracle, 8);
    EXPECT_EQ(values[guess],
              *std::min_element(values.begin(), values.end()));
  }
}

TEST(DuelTest, AmbiguityPreservedAtTheQueryBudget) {
  for (int m : {16, 64, 256}) {
    std::ostringstream log;
    DuelResult r = RunPivotSelectDuel(m, &log);
    const int q = static_cast<int>(std::sqrt(static_cast<double>(m))) - 1;
    EXPECT_EQ(r.value_queries, q);
    EXPECT_EQ(r.demand_queries, q);
    EXPECT_TRUE(r.ambiguity_preserved()) << "m=" << m;
    std::istringstream lines(log.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      nlohmann::json j = nlohmann::json::parse(line);
      EXPECT_TRUE(j.contains("kind") && j.contains("input") &&
                  j.contains("output") && j.contains("ledger"));
      ++count;
    }
    EXPECT_EQ(count, 2 * q);
  }
}

}  // namespace
}  // namespace primcx
