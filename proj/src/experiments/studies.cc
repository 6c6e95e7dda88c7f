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

#include "primcx/experiments/studies.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "primcx/adversary/duel.h"
#include "primcx/core/errors.h"
#include "primcx/core/rng.h"
#include "primcx/core/tie_policy.h"
#include "primcx/experiments/instances.h"
#include "primcx/experiments/parallel.h"
#include "primcx/hardness/demand_families.h"
#include "primcx/kopt/k_optimal.h"
#include "primcx/menus/fixture.h"
#include "primcx/menus/implementation.h"
#include "primcx/menus/revenue.h"
#include "primcx/menus/rounding.h"
#include "primcx/oracles/counted_oracle.h"
#include "primcx/oracles/demand.h"
#include "primcx/valuations/hard_submodular.h"
#include "primcx/valuations/weighted_matroid_rank.h"

namespace primcx {
namespace {

using Row = std::vector<std::string>;

// Best k-set value of a weighted matroid rank function: greedy on the
// matroid truncated to rank k, independent of the oracle machinery.
Rational GreedyTopK(const WeightedMatroidRankValuation& v, int k) {
  std::unique_ptr<Matroid::Builder> builder = v.matroid().NewBuilder();
  Rational sum(0);
  int taken = 0;
  for (int item : v.greedy_order()) {
    if (taken == k || v.weights()[item].sign() <= 0) break;
    if (!builder->CanAdd(item)) continue;
    builder->Add(item);
    sum += v.weights()[item];
    ++taken;
  }
  return sum;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::string Millis() const {
    const std::chrono::duration<double, std::milli> d =
        std::chrono::steady_clock::now() - start_;
    return FloatColumn(static_cast<double>(static_cast<int64_t>(d.count() *
                                                                1000)) /
                       1000);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Stable across builds, unlike std::hash.
uint64_t Label(std::string_view text) {
  uint64_t h = 1469598103934665603ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Rows plus violations produced by one parallel task.
struct TaskOutput {
  std::vector<Row> rows;
  std::vector<std::string> violations;
};

void Merge(StudyResult& result, std::vector<TaskOutput>&& outputs) {
  for (TaskOutput& out : outputs) {
    for (Row& row : out.rows) result.table.AddRow(std::move(row));
    for (std::string& v : out.violations) result.Violation(std::move(v));
  }
}

template <typename T>
std::vector<T> OrDefault(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

std::vector<uint64_t> SeedRange(uint64_t count) {
  std::vector<uint64_t> seeds(count);
  for (uint64_t i = 0; i < count; ++i) seeds[i] = i;
  return seeds;
}

std::vector<int> SizeRange(int lo, int hi) {
  std::vector<int> sizes;
  for (int m = lo; m <= hi; ++m) sizes.push_back(m);
  return sizes;
}

constexpr const char* kPolicyNames[] = {"lexmin", "lexmax", "random",
                                        "adversarial"};

TiePolicy PolicyFor(int index, uint64_t seed) {
  switch (index) {
    case 0:
      return TiePolicy::LexMin();
    case 1:
      return TiePolicy::LexMax();
    case 2:
      return TiePolicy::SeededRandom(seed);
    default:
      return TiePolicy::CyclingAdversary(seed);
  }
}

std::string Str(int64_t x) { return std::to_string(x); }

}  // namespace

void StudyResult::Violation(std::string message) {
  ++violations;
  if (messages.size() < 20) messages.push_back(std::move(message));
}

StudyResult RunKoptScaling(const ExperimentConfig& cfg) {
  const std::vector<int> ms =
      OrDefault(cfg.m, {1 << 10, 1 << 12, 1 << 14, 1 << 17});
  const std::vector<uint64_t> seeds = OrDefault(cfg.seeds, SeedRange(100));
  const std::vector<std::string> classes =
      OrDefault(cfg.classes, {std::string("additive")});
  for (const std::string& cls : classes) {
    CheckClassName(cls);
    if (cls == "hard") throw ParseError("kopt-scaling needs additive or wmr");
  }
  for (int m : ms) {
    if (m < 1) throw ParseError("m must be positive");
    KValues(cfg.k, m, 0);
  }
  TiePolicy::Parse(cfg.tie);

  struct Task {
    std::string cls;
    int m;
    uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const std::string& cls : classes) {
    for (int m : ms) {
      for (uint64_t seed : seeds) tasks.push_back({cls, m, seed});
    }
  }
  StudyResult result;
  result.table.header = {"class",         "m",
                         "k",             "seed",
                         "tie",           "value_queries",
                         "demand_queries", "primitive_ops",
                         "total_queries", "value",
                         "value_f",       "optimum",
                         "correct",       kWallColumn};
  auto run = [&](size_t i) {
    const Task& t = tasks[i];
    TaskOutput out;
    const Rng base = Rng(t.seed).Fork(Label(t.cls)).Fork(t.m);
    Rng instance_rng = base.Fork(1);
    std::shared_ptr<const Valuation> v =
        ScalingInstance(t.cls, t.m, instance_rng);
    std::vector<Rational> profile;
    std::vector<Rational> sorted;
    if (t.m <= 20) {
      profile = BruteForceValueProfile(*v);
    } else if (t.cls == "additive") {
      sorted = static_cast<const AdditiveValuation&>(*v).values();
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
    }
    for (int k : KValues(cfg.k, t.m, base.Fork(2).Next())) {
      Stopwatch watch;
      CountedOracle oracle(v, TiePolicy::Parse(cfg.tie));
      Rng alg = base.Fork(3).Fork(k);
      KOptResult r = t.cls == "additive" ? KOptimalAdditive(oracle, k, alg)
                                         : KOptimalWmr(oracle, k, alg);
      std::optional<Rational> optimum;
      if (!profile.empty()) {
        optimum = profile[k];
      } else if (!sorted.empty()) {
        Rational sum(0);
        for (int j = 0; j < k; ++j) sum += sorted[j];
        optimum = sum;
      } else if (IsWmrClass(t.cls)) {
        optimum = GreedyTopK(
            static_cast<const WeightedMatroidRankValuation&>(*v), k);
      }
      std::string correct = "na";
      if (optimum) {
        const bool ok = r.set.size() == k && v->Value(r.set) == r.value &&
                        r.value == *optimum;
        correct = BoolColumn(ok);
        if (!ok) {
          out.violations.push_back("k-optimal mismatch: class " + t.cls +
                                   " m " + Str(t.m) + " k " + Str(k) +
                                   " seed " + std::to_string(t.seed));
        }
      }
      const QueryLedger& l = oracle.ledger();
      out.rows.push_back({t.cls, Str(t.m), Str(k), std::to_string(t.seed),
                          cfg.tie, Str(l.value_queries), Str(l.demand_queries),
                          Str(l.primitive_ops), Str(l.Total()),
                          r.value.ToString(), FloatColumn(r.value),
                          optimum ? optimum->ToString() : "", correct,
                          watch.Millis()});
    }
    return out;
  };
  Merge(result, ParallelMap<TaskOutput>(tasks.size(), cfg.threads, run));
  return result;
}

namespace {

// Brute-force buyer on a size menu: best of the empty bundle and each
// affordable size at its best value, lowest payment on ties.
struct SimpleChoice {
  Rational profit;
  Rational payment;
};

SimpleChoice BruteForceChoice(const BundleSizeMenu& menu,
                              const std::vector<Rational>& profile) {
  SimpleChoice best{Rational(0), Rational(0)};
  const int m = static_cast<int>(profile.size()) - 1;
  for (const MenuEntry& e : menu.entries()) {
    if (e.size > m) continue;
    const Rational profit = profile[e.size] - e.price;
    if (profit > best.profit) best = {profit, e.price};
  }
  return best;
}

}  // namespace

StudyResult RunMenuSuite(const ExperimentConfig& cfg) {
  if (cfg.fixtures.empty()) throw ParseError("menu-suite needs --fixtures");
  std::vector<MenuFixture> fixtures;
  if (std::filesystem::is_regular_file(cfg.fixtures)) {
    fixtures.push_back(LoadMenuFixture(cfg.fixtures));
  } else if (std::filesystem::is_directory(cfg.fixtures)) {
    fixtures = LoadMenuFixtures(cfg.fixtures);
  } else {
    throw ParseError("fixture path not found: " + cfg.fixtures);
  }
  if (fixtures.empty()) throw ParseError("no fixtures in " + cfg.fixtures);
  for (const Rational& e : cfg.eps) {
    if (e.sign() <= 0 || e >= Rational(1)) {
      throw ParseError("eps must lie in (0, 1)");
    }
  }
  std::vector<std::pair<size_t, Rational>> tasks;
  for (size_t f = 0; f < fixtures.size(); ++f) {
    if (cfg.eps.empty()) {
      tasks.emplace_back(f, fixtures[f].eps);
    } else {
      for (const Rational& e : cfg.eps) tasks.emplace_back(f, e);
    }
  }
  StudyResult result;
  result.table.header = {
      "fixture",        "eps",           "rev_before",       "rev_after",
      "ratio",          "ratio_f",       "rev_rounded",      "rev_pruned",
      "levels_before",  "levels_after",  "implementation",   "buyer_checks",
      "buyer_mismatches", "buyer_queries", "guarantee",      kWallColumn};
  auto run = [&](size_t i) {
    Stopwatch watch;
    const MenuFixture& f = fixtures[tasks[i].first];
    const Rational& eps = tasks[i].second;
    const ValuationDistribution& dist = f.distribution;
    const Rational one(1);
    const Rational before = ExpectedRevenue(f.menu, dist);
    const BundleSizeMenu rounded = RoundMenu(f.menu, eps).menu;
    const Rational rev_rounded = ExpectedRevenue(rounded, dist);
    const Rational rev_pruned =
        ExpectedRevenue(PruneLowRevenue(f.menu, dist, eps), dist);
    const MenuImplementation impl = BuildImplementation(f.menu, dist, eps);
    const Rational after = ImplementationRevenue(impl, dist);
    const Rational ratio = before.is_zero() ? one : after / before;
    const BundleSizeMenu offered = impl.Offered();
    const bool grand = impl.kind == MenuImplementation::Kind::kGrandBundleOnly;
    int64_t mismatches = 0, queries = 0;
    const auto& support = dist.support();
    for (size_t p = 0; p < support.size(); ++p) {
      const Valuation& v = *support[p].valuation;
      CountedOracle oracle(support[p].valuation);
      Rng rng = Rng(p).Fork(Label(f.name));
      const BuyerRun run = RunBuyer(impl, oracle, rng);
      queries += oracle.ledger().Total();
      const SimpleChoice ref =
          BruteForceChoice(offered, BruteForceValueProfile(v));
      const bool at_threshold =
          grand && v.Value(ItemSet::Full(v.num_items())) == *impl.threshold;
      const bool ok =
          run.outcome.profit == ref.profit &&
          (at_threshold || run.outcome.payment == ref.payment) &&
          v.Value(run.outcome.set) == run.outcome.profit + run.outcome.payment;
      mismatches += !ok;
    }
    const bool guarantee = ratio >= one - Rational(2) * eps &&
                           rev_pruned >= (one - eps) * before &&
                           mismatches == 0;
    TaskOutput out;
    if (!guarantee) {
      out.violations.push_back("menu guarantee failed: " + f.name + " eps " +
                               eps.ToString());
    }
    out.rows.push_back(
        {f.name, eps.ToString(), before.ToString(), after.ToString(),
         ratio.ToString(), FloatColumn(ratio), rev_rounded.ToString(),
         rev_pruned.ToString(), Str(f.menu.num_entries()),
         Str(rounded.num_entries()), grand ? "grand_bundle" : "pruned_menu",
         Str(static_cast<int64_t>(support.size())), Str(mismatches),
         Str(queries), BoolColumn(guarantee), watch.Millis()});
    return out;
  };
  Merge(result, ParallelMap<TaskOutput>(tasks.size(), cfg.threads, run));
  return result;
}

StudyResult RunAdversaryDuels(const ExperimentConfig& cfg,
                              std::ostream* transcripts) {
  const std::vector<int> ms = OrDefault(cfg.m, {16, 64, 256});
  for (int m : ms) {
    if (m < 4) throw ParseError("duels need m >= 4");
  }
  const int64_t trials = cfg.trials < 0 ? 1 : cfg.trials;
  std::vector<int> tasks;
  for (int m : ms) {
    for (int64_t t = 0; t < trials; ++t) tasks.push_back(m);
  }
  struct DuelOutput {
    TaskOutput out;
    std::string transcript;
  };
  StudyResult result;
  result.table.header = {"m",
                         "algorithm",
                         "value_queries",
                         "demand_queries",
                         "ambiguity_preserved",
                         "committed",
                         "rank",
                         kWallColumn};
  auto run = [&](size_t i) {
    Stopwatch watch;
    std::ostringstream log;
    const DuelResult d = RunPivotSelectDuel(tasks[i], &log);
    DuelOutput out;
    out.transcript = log.str();
    if (!d.ambiguity_preserved()) {
      out.out.violations.push_back("ambiguity lost at m " + Str(d.m));
    }
    out.out.rows.push_back({Str(d.m), d.algorithm, Str(d.value_queries),
                            Str(d.demand_queries),
                            BoolColumn(d.ambiguity_preserved()),
                            Str(d.committed), Str(d.rank), watch.Millis()});
    return out;
  };
  std::vector<DuelOutput> outputs =
      ParallelMap<DuelOutput>(tasks.size(), cfg.threads, run);
  std::vector<TaskOutput> rows;
  for (size_t i = 0; i < outputs.size(); ++i) {
    if (transcripts != nullptr) {
      std::istringstream lines(outputs[i].transcript);
      std::string line;
      while (std::getline(lines, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        j["m"] = tasks[i];
        *transcripts << j.dump() << '\n';
      }
    }
    rows.push_back(std::move(outputs[i].out));
  }
  Merge(result, std::move(rows));
  return result;
}

namespace {

PriceVector HardnessPrices(Rng& rng, int m, bool near_marginals) {
  std::vector<Rational> prices(m);
  for (Rational& p : prices) {
    if (near_marginals) {
      p = Rational(rng.UniformRange(10, 80), 110);
    } else {
      const int64_t den = rng.UniformRange(1, 30);
      p = Rational(rng.UniformRange(0, den), den);
    }
  }
  return PriceVector::Dense(prices);
}

}  // namespace

StudyResult RunHardnessCheck(const ExperimentConfig& cfg) {
  const std::vector<int> ms = OrDefault(cfg.m, {6, 8, 10});
  for (int m : ms) {
    if (m < 4 || m > HardSubmodularValuation::kMaxItems || m % 2 != 0) {
      throw ParseError("hardness m must be even in 4..24");
    }
  }
  const std::vector<uint64_t> seeds = OrDefault(cfg.seeds, SeedRange(50));
  const int64_t trials = cfg.trials < 0 ? 10000 : cfg.trials;

  // Per-task tallies; tasks are per-valuation or per-price-vector.
  struct Tally {
    int64_t valuations = 0, submodular = 0, g_unique = 0, greedy = 0,
            probe = 0;
    int64_t vectors = 0, premise = 0, holds = 0, family_sum = 0,
            family_max = 0;
  };
  struct Task {
    size_t m_index;
    bool claim;
    uint64_t index;
  };
  std::vector<Task> tasks;
  for (size_t mi = 0; mi < ms.size(); ++mi) {
    for (uint64_t s : seeds) tasks.push_back({mi, false, s});
    for (int64_t t = 0; t < trials; ++t) {
      tasks.push_back({mi, true, static_cast<uint64_t>(t)});
    }
  }
  auto run = [&](size_t i) {
    const Task& t = tasks[i];
    const int m = ms[t.m_index];
    Tally tally;
    if (!t.claim) {
      Rng rng = Rng(t.index).Fork(m);
      const HardSubmodularValuation v = SampleHardValuation(m, rng).valuation;
      tally.valuations = 1;
      tally.submodular = VerifySubmodular(v);
      tally.g_unique = GIsUniqueKOptimal(v);
      tally.greedy = GreedyFindsG(v);
      Rng probe_rng = rng.Fork(1);
      tally.probe = RandomProbeFindsG(v, int64_t{m} * m, probe_rng);
    } else {
      Rng rng = Rng(t.index).Fork(m).Fork(7);
      const HardSubmodularValuation v = SampleHardValuation(m, rng).valuation;
      const PriceVector p = HardnessPrices(rng, m, t.index % 3 != 0);
      const SizeKCheck check = CheckSizeKClaim(v, p);
      const int64_t family =
          static_cast<int64_t>(CandidateFamilies(v, p).at(v.k()).size());
      tally.vectors = 1;
      tally.premise = check.premise;
      tally.holds = check.holds;
      tally.family_sum = family;
      tally.family_max = family;
    }
    return tally;
  };
  const std::vector<Tally> tallies =
      ParallelMap<Tally>(tasks.size(), cfg.threads, run);
  std::vector<Tally> per_m(ms.size());
  for (size_t i = 0; i < tasks.size(); ++i) {
    Tally& a = per_m[tasks[i].m_index];
    const Tally& b = tallies[i];
    a.valuations += b.valuations;
    a.submodular += b.submodular;
    a.g_unique += b.g_unique;
    a.greedy += b.greedy;
    a.probe += b.probe;
    a.vectors += b.vectors;
    a.premise += b.premise;
    a.holds += b.holds;
    a.family_sum += b.family_sum;
    a.family_max = std::max(a.family_max, b.family_max);
  }
  StudyResult result;
  result.table.header = {"m",
                         "k",
                         "valuations",
                         "submodular_ok",
                         "g_unique",
                         "greedy_finds_g",
                         "probe_budget",
                         "probe_finds_g",
                         "price_vectors",
                         "premise",
                         "claim_holds",
                         "claim_pass_rate",
                         "mean_family_k",
                         "max_family_k",
                         kWallColumn};
  Stopwatch watch;
  for (size_t mi = 0; mi < ms.size(); ++mi) {
    const int m = ms[mi];
    const Tally& a = per_m[mi];
    if (a.submodular != a.valuations || a.g_unique != a.valuations ||
        a.holds != a.vectors) {
      result.Violation("hardness check failed at m " + Str(m));
    }
    const Rational rate = a.vectors ? Rational(a.holds, a.vectors) : Rational(1);
    const Rational mean =
        a.vectors ? Rational(a.family_sum, a.vectors) : Rational(0);
    result.table.AddRow({Str(m), Str(m / 2 - 1), Str(a.valuations),
                         Str(a.submodular), Str(a.g_unique), Str(a.greedy),
                         Str(int64_t{m} * m), Str(a.probe), Str(a.vectors),
                         Str(a.premise), Str(a.holds), rate.ToString(),
                         FloatColumn(mean), Str(a.family_max),
                         watch.Millis()});
  }
  return result;
}

StudyResult RunVerify(const ExperimentConfig& cfg, VerifyScope scope) {
  const std::vector<uint64_t> seeds = OrDefault(cfg.seeds, SeedRange(200));
  const int64_t trials = cfg.trials < 0 ? 10000 : cfg.trials;
  const std::vector<std::string> all_classes = {
      "additive", "wmr-uniform", "wmr-partition", "wmr-graphic", "hard"};
  const std::vector<std::string> classes =
      OrDefault(cfg.classes, all_classes);
  for (const std::string& cls : classes) CheckClassName(cls);
  for (int m : cfg.m) {
    if (m < 1 || m > 16) throw ParseError("verify needs m in 1..16");
  }

  enum class Check { kKopt, kDemand };
  struct Task {
    Check check;
    std::string cls;
    int m;
    int policy;
    int64_t first, last;  // Demand trial range.
  };
  std::vector<Task> tasks;
  for (const std::string& cls : classes) {
    if (cls == "hard" || scope == VerifyScope::kDemand) continue;
    const bool additive = cls == "additive";
    const std::vector<int> ms =
        OrDefault(cfg.m, additive ? SizeRange(4, 12) : SizeRange(1, 10));
    for (int m : ms) {
      for (int p = 0; p < 4; ++p) tasks.push_back({Check::kKopt, cls, m, p, 0, 0});
    }
  }
  constexpr int64_t kChunk = 250;
  for (const std::string& cls : classes) {
    if (scope == VerifyScope::kKOptimal) continue;
    for (int64_t first = 0; first < trials; first += kChunk) {
      tasks.push_back({Check::kDemand, cls, 0, -1, first,
                       std::min(trials, first + kChunk)});
    }
  }

  struct Counts {
    int64_t runs = 0, failures = 0, mwis_runs = 0, mwis_failures = 0;
    std::vector<std::string> violations;
    std::string wall;
  };
  auto run_kopt = [&](const Task& t, Counts& c) {
    const bool additive = t.cls == "additive";
    for (uint64_t seed : seeds) {
      const Rng base = Rng(seed).Fork(Label(t.cls)).Fork(t.m);
      Rng instance_rng = base.Fork(1);
      std::shared_ptr<const Valuation> v =
          CorpusInstance(t.cls, t.m, instance_rng);
      const std::vector<Rational> profile = BruteForceValueProfile(*v);
      for (int k = 0; k <= t.m; ++k) {
        CountedOracle oracle(v, PolicyFor(t.policy, seed * 131 + k));
        Rng alg = base.Fork(2 + t.policy).Fork(k);
        KOptResult r = additive ? KOptimalAdditive(oracle, k, alg)
                                : KOptimalWmr(oracle, k, alg);
        ++c.runs;
        if (r.set.size() != k || v->Value(r.set) != r.value ||
            r.value != profile[k]) {
          ++c.failures;
          c.violations.push_back("k-optimal " + t.cls + " m " + Str(t.m) +
                                 " k " + Str(k) + " seed " +
                                 std::to_string(seed) + " " +
                                 kPolicyNames[t.policy]);
        }
      }
      if (!additive) {
        CountedOracle oracle(v, PolicyFor(t.policy, seed * 131 + 7));
        Rng alg = base.Fork(9 + t.policy);
        const IndependentSet r = MaxWeightIndependentSet(oracle, alg);
        const auto& wmr = static_cast<const WeightedMatroidRankValuation&>(*v);
        ++c.mwis_runs;
        if (r.value != v->Value(ItemSet::Full(t.m)) ||
            v->Value(r.set) != r.value ||
            !wmr.matroid().IsIndependent(r.set)) {
          ++c.mwis_failures;
          c.violations.push_back("max-weight independent set " + t.cls +
                                 " m " + Str(t.m) + " seed " +
                                 std::to_string(seed));
        }
      }
    }
  };
  auto run_demand = [&](const Task& t, Counts& c) {
    for (int64_t trial = t.first; trial < t.last; ++trial) {
      Rng rng = Rng(static_cast<uint64_t>(trial)).Fork(Label(t.cls)).Fork(99);
      const int m = t.cls == "hard"
                        ? 4 + 2 * static_cast<int>(rng.UniformInt(7))
                        : 1 + static_cast<int>(rng.UniformInt(16));
      std::shared_ptr<const Valuation> v = CorpusInstance(t.cls, m, rng);
      const PriceVector prices = CorpusPrices(m, rng);
      const int policy = static_cast<int>(trial % 4);
      const DemandFamily family = EnumerateDemand(*v, prices);
      CountedOracle oracle(v, PolicyFor(policy, static_cast<uint64_t>(trial)));
      const DemandResult d = oracle.Demand(prices);
      ++c.runs;
      const std::optional<Rational> profit = Profit(*v, d.set, prices);
      const bool member = std::find(family.sets.begin(), family.sets.end(),
                                    d.set) != family.sets.end();
      if (!member || !profit || *profit != family.max_profit ||
          d.value != v->Value(d.set)) {
        ++c.failures;
        c.violations.push_back("demand " + t.cls + " trial " + Str(trial) +
                               " " + kPolicyNames[policy]);
      }
    }
  };
  auto run = [&](size_t i) {
    Stopwatch watch;
    Counts c;
    if (tasks[i].check == Check::kKopt) {
      run_kopt(tasks[i], c);
    } else {
      run_demand(tasks[i], c);
    }
    c.wall = watch.Millis();
    return c;
  };
  const std::vector<Counts> counts =
      ParallelMap<Counts>(tasks.size(), cfg.threads, run);

  StudyResult result;
  result.table.header = {"check", "class",    "m",        "policy",
                         "runs",  "failures", kWallColumn};
  std::map<std::string, std::pair<Counts, double>> demand;  // By class.
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const Counts& c = counts[i];
    for (const std::string& v : c.violations) result.Violation(v);
    if (t.check == Check::kKopt) {
      result.table.AddRow({"kopt", t.cls, Str(t.m), kPolicyNames[t.policy],
                           Str(c.runs), Str(c.failures), c.wall});
      if (t.cls != "additive") {
        result.table.AddRow({"mwis", t.cls, Str(t.m), kPolicyNames[t.policy],
                             Str(c.mwis_runs), Str(c.mwis_failures), c.wall});
      }
    } else {
      auto& [agg, wall] = demand[t.cls];
      agg.runs += c.runs;
      agg.failures += c.failures;
      wall += std::stod(c.wall);
    }
  }
  for (const std::string& cls : classes) {
    auto it = demand.find(cls);
    if (it == demand.end()) continue;
    const Counts& agg = it->second.first;
    result.table.AddRow({"demand", cls, cls == "hard" ? "4-16" : "1-16", "all",
                         Str(agg.runs), Str(agg.failures),
                         FloatColumn(it->second.second)});
  }
  return result;
}

}  // namespace primcx
