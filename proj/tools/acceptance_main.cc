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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: primcx_acceptance <primcx binary> <fixture dir>.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "primcx/adversary/adversary.h"
#include "primcx/adversary/duel.h"
#include "primcx/core/rational.h"
#include "primcx/core/rng.h"
#include "primcx/experiments/config.h"
#include "primcx/experiments/csv.h"
#include "primcx/experiments/studies.h"
#include "primcx/menus/fixture.h"
#include "primcx/menus/menu.h"
#include "primcx/menus/revenue.h"
#include "primcx/menus/rounding.h"
#include "primcx/oracles/demand.h"
#include "primcx/valuations/valuation.h"

namespace primcx {
namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

int Column(const CsvTable& t, const std::string& name) {
  auto it = std::find(t.header.begin(), t.header.end(), name);
  return static_cast<int>(it - t.header.begin());
}

int64_t SumColumn(const CsvTable& t, const std::string& name) {
  const int c = Column(t, name);
  int64_t sum = 0;
  for (const auto& row : t.rows) sum += std::stoll(row[c]);
  return sum;
}

std::string Messages(const StudyResult& r) {
  std::string out;
  for (size_t i = 0; i < r.messages.size() && i < 3; ++i) {
    out += "; " + r.messages[i];
  }
  return out;
}

Verdict CorpusVerdict(const StudyResult& r) {
  const int64_t runs = SumColumn(r.table, "runs");
  const int64_t failures = SumColumn(r.table, "failures");
  return {failures == 0 && r.violations == 0 && runs > 0,
          std::to_string(runs) + " runs, " + std::to_string(failures) +
              " failures" + Messages(r)};
}

Verdict Criterion1() {
  ExperimentConfig cfg;
  cfg.classes = {"additive"};
  cfg.m = {4, 5, 6, 7, 8, 9, 10, 11, 12};
  cfg.seeds = ParseSeedList("0-199");
  cfg.threads = ThreadsFromEnvironment();
  return CorpusVerdict(RunVerify(cfg, VerifyScope::kKOptimal));
}

Verdict Criterion2() {
  ExperimentConfig cfg;
  cfg.classes = {"wmr-uniform", "wmr-partition", "wmr-graphic"};
  cfg.m = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  cfg.seeds = ParseSeedList("0-199");
  cfg.threads = ThreadsFromEnvironment();
  const StudyResult r = RunVerify(cfg, VerifyScope::kKOptimal);
  const int check = Column(r.table, "check");
  const int runs = Column(r.table, "runs");
  int64_t mwis = 0;
  for (const auto& row : r.table.rows) {
    if (row[check] == "mwis") mwis += std::stoll(row[runs]);
  }
  Verdict v = CorpusVerdict(r);
  v.detail += " (" + std::to_string(mwis) + " max-weight independent sets)";
  return v;
}

Rational Median(std::vector<int64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const size_t n = xs.size();
  if (n % 2 == 1) return Rational(xs[n / 2]);
  return Rational(xs[n / 2 - 1] + xs[n / 2], 2);
}

Verdict Criterion3() {
  ExperimentConfig cfg;
  cfg.classes = {"additive", "wmr-partition"};
  cfg.m = {1 << 10, 1 << 12, 1 << 14, 1 << 17};
  cfg.seeds = ParseSeedList("0-99");
  cfg.k = "half";
  cfg.threads = ThreadsFromEnvironment();
  const StudyResult r = RunKoptScaling(cfg);
  const int cls = Column(r.table, "class"), m = Column(r.table, "m"),
            total = Column(r.table, "total_queries");
  std::map<std::string, std::map<int, std::vector<int64_t>>> totals;
  for (const auto& row : r.table.rows) {
    totals[row[cls]][std::stoi(row[m])].push_back(std::stoll(row[total]));
  }
  bool pass = r.violations == 0;
  std::ostringstream detail;
  for (const std::string& c : cfg.classes) {
    std::vector<Rational> med;
    for (int size : cfg.m) med.push_back(Median(totals[c][size]));
    for (size_t i = 1; i < med.size(); ++i) pass &= med[i] >= med[i - 1];
    const Rational ratio = med.back() / med.front();
    const Rational limit = Rational(1 << 17, 50);
    pass &= ratio < Rational(10) && med.back() < limit;
    detail << c << ": medians";
    for (const Rational& x : med) detail << " " << x.ToDouble();
    detail << ", ratio " << ratio.ToDouble() << " < 10, median "
           << med.back().ToDouble() << " < m/50 = " << limit.ToDouble()
           << "; ";
  }
  detail << r.violations << " incorrect outputs";
  return {pass, detail.str()};
}

BundleSizeMenu RandomMenu(Rng& rng, int m, int64_t max_ratio) {
  std::vector<int> sizes;
  for (int k = 1; k <= m; ++k) {
    if (rng.Coin()) sizes.push_back(k);
  }
  if (sizes.empty()) sizes.push_back(1 + static_cast<int>(rng.UniformInt(m)));
  std::vector<int64_t> raw(sizes.size());
  for (int64_t& x : raw) x = rng.UniformRange(1, max_ratio);
  raw.push_back(1);
  raw.push_back(max_ratio);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // Keep the extremes so the menu spans the full ratio.
  while (raw.size() > sizes.size()) raw.erase(raw.begin() + raw.size() / 2);
  std::vector<MenuEntry> entries;
  const int64_t den = rng.UniformRange(1, 7);
  for (size_t i = 0; i < raw.size(); ++i) {
    entries.push_back({sizes[i], Rational(raw[i], den)});
  }
  return BundleSizeMenu(std::move(entries));
}

Verdict Criterion4() {
  const std::vector<Rational> eps_list = {Rational(1, 2), Rational(1, 4),
                                          Rational(1, 10)};
  int64_t pairs = 0, failures = 0, ratio_checks = 0;
  Rational worst(2);
  for (int trial = 0; trial < 10000; ++trial) {
    Rng rng = Rng(static_cast<uint64_t>(trial)).Fork(4);
    const Rational& eps = eps_list[trial % 3];
    const int m = 1 + static_cast<int>(rng.UniformInt(10));
    int64_t max_ratio = 1;
    for (int d = static_cast<int>(rng.UniformInt(7)); d > 0; --d) {
      max_ratio *= 10;
    }
    const BundleSizeMenu menu = RandomMenu(rng, m, max_ratio);
    const Rational h = menu.PriceRatio();
    const RoundedMenu rounded = RoundMenu(menu, eps);
    // Item values spread so bundles of every size straddle the prices.
    std::vector<Rational> values(m);
    const int64_t spread = 1 + static_cast<int64_t>(rng.UniformInt(m));
    for (Rational& x : values) {
      x = menu.MaxPrice() * Rational(rng.UniformRange(0, 1000), 1000 * spread);
    }
    const AdditiveValuation v(values);
    const Rational before = Revenue(menu, v, MenuTie::kSellerBest);
    const Rational after = Revenue(rounded.menu, v, MenuTie::kSellerWorst);
    bool ok = after >= (Rational(1) - eps) * before;
    if (!before.is_zero()) worst = std::min(worst, after / before);
    ok &= LevelCountWithinBound(rounded.menu.num_entries(), h, eps);
    if (h > Rational(2)) {
      ++ratio_checks;
      ok &= AdjacentRatiosAtLeast(rounded.menu, eps);
    }
    ++pairs;
    failures += !ok;
  }
  std::ostringstream detail;
  detail << pairs << " pairs, " << failures << " failures, "
         << ratio_checks << " adjacent-ratio checks, worst revenue ratio "
         << worst.ToDouble();
  return {failures == 0, detail.str()};
}

Verdict Criterion5(const std::string& fixture_dir) {
  const std::vector<MenuFixture> fixtures = LoadMenuFixtures(fixture_dir);
  bool shape_ok = fixtures.size() >= 20;
  for (const MenuFixture& f : fixtures) {
    shape_ok &= f.distribution.num_items() <= 10;
    for (const SupportPoint& p : f.distribution.support()) {
      shape_ok &= p.valuation->kind() == ValuationKind::kWeightedMatroidRank;
    }
  }
  ExperimentConfig cfg;
  cfg.fixtures = fixture_dir;
  cfg.threads = ThreadsFromEnvironment();
  const StudyResult r = RunMenuSuite(cfg);
  const int guarantee = Column(r.table, "guarantee");
  const int ratio = Column(r.table, "ratio_f");
  int64_t held = 0;
  double worst = 1e300;
  for (const auto& row : r.table.rows) {
    held += row[guarantee] == "true";
    worst = std::min(worst, std::stod(row[ratio]));
  }
  std::ostringstream detail;
  detail << fixtures.size() << " WMR fixtures (m <= 10: "
         << (shape_ok ? "yes" : "no") << "), " << held << "/"
         << r.table.rows.size() << " meet pruning, pipeline and buyer checks ("
         << SumColumn(r.table, "buyer_checks")
         << " buyer runs), lowest pipeline ratio " << worst << Messages(r);
  return {shape_ok && r.violations == 0 &&
              held == static_cast<int64_t>(r.table.rows.size()),
          detail.str()};
}

Verdict Criterion6() {
  ExperimentConfig cfg;
  cfg.m = {6, 8, 10};
  cfg.seeds = ParseSeedList("0-49");
  cfg.trials = 0;
  cfg.threads = ThreadsFromEnvironment();
  const StudyResult family = RunHardnessCheck(cfg);
  cfg.m = {6, 8};
  cfg.seeds = {0};
  cfg.trials = 10000;
  const StudyResult claim = RunHardnessCheck(cfg);
  const int64_t valuations = SumColumn(family.table, "valuations");
  const bool ok = family.violations == 0 && claim.violations == 0 &&
                  SumColumn(family.table, "submodular_ok") == valuations &&
                  SumColumn(family.table, "g_unique") == valuations &&
                  valuations == 150 &&
                  SumColumn(claim.table, "claim_holds") == 20000;
  std::ostringstream detail;
  detail << SumColumn(family.table, "submodular_ok") << "/" << valuations
         << " submodular, " << SumColumn(family.table, "g_unique") << "/"
         << valuations << " with G the unique optimum, size-k claim "
         << SumColumn(claim.table, "claim_holds") << "/"
         << SumColumn(claim.table, "price_vectors") << " ("
         << SumColumn(claim.table, "premise") << " with premise)";
  return {ok, detail.str()};
}

// Independent demand check: the answered set is in the enumerated family.
bool ReplaysByEnumeration(const std::vector<AdversaryQuery>& transcript,
                          const AdditiveValuation& v) {
  for (const AdversaryQuery& q : transcript) {
    if (v.Value(q.set) != q.value) return false;
    if (q.kind != AdversaryQuery::Kind::kDemand) continue;
    const DemandFamily family = EnumerateDemand(v, q.prices);
    if (std::find(family.sets.begin(), family.sets.end(), q.set) ==
        family.sets.end()) {
      return false;
    }
  }
  return true;
}

Verdict Criterion7() {
  bool pass = true;
  std::ostringstream detail;
  for (int m : {16, 64, 256}) {
    const DuelResult d = RunPivotSelectDuel(m);
    const int q = static_cast<int>(std::sqrt(static_cast<double>(m))) - 1;
    bool ok = d.ambiguity_preserved() && d.value_queries == q &&
              d.demand_queries == q;
    if (ok && m <= 16) {
      ok = ReplaysByEnumeration(d.transcript, *d.certificate->x) &&
           ReplaysByEnumeration(d.transcript, *d.certificate->y);
    }
    pass &= ok;
    detail << "m=" << m << ": " << d.value_queries << "v+" << d.demand_queries
           << "d, |L|=" << d.committed << ", rank " << d.rank << ", "
           << (ok ? "ambiguous" : "NOT ambiguous") << "; ";
  }
  std::string text = detail.str();
  text.resize(text.size() - 2);
  return {pass, text};
}

Verdict Criterion8() {
  ExperimentConfig cfg;
  cfg.trials = 10000;
  cfg.threads = ThreadsFromEnvironment();
  return CorpusVerdict(RunVerify(cfg, VerifyScope::kDemand));
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict Criterion9(const std::string& binary, const std::string& fixtures) {
  // In-process: every study twice, with one and with three workers.
  std::vector<std::pair<std::string, std::function<StudyResult(int)>>> runs =
      {{"kopt-scaling",
        [](int threads) {
          ExperimentConfig c;
          c.classes = {"additive", "wmr-partition", "wmr-graphic"};
          c.m = {12, 300, 2048};
          c.seeds = ParseSeedList("0-7");
          c.k = "random";
          c.tie = "random:5";
          c.threads = threads;
          return RunKoptScaling(c);
        }},
       {"menu-suite",
        [&](int threads) {
          ExperimentConfig c;
          c.fixtures = fixtures;
          c.eps = {Rational(1, 4), Rational(1, 2)};
          c.threads = threads;
          return RunMenuSuite(c);
        }},
       {"adversary-duel",
        [](int threads) {
          ExperimentConfig c;
          c.m = {16, 36, 64};
          c.trials = 2;
          c.threads = threads;
          return RunAdversaryDuels(c);
        }},
       {"hardness-check",
        [](int threads) {
          ExperimentConfig c;
          c.m = {6, 8};
          c.seeds = ParseSeedList("0-9");
          c.trials = 600;
          c.threads = threads;
          return RunHardnessCheck(c);
        }},
       {"verify", [](int threads) {
          ExperimentConfig c;
          c.m = {5, 8};
          c.seeds = ParseSeedList("0-9");
          c.trials = 800;
          c.threads = threads;
          return RunVerify(c);
        }}};
  bool pass = true;
  std::ostringstream detail;
  int identical = 0;
  for (auto& [name, run] : runs) {
    const bool same = run(1).table.Render(false) == run(3).table.Render(false);
    identical += same;
    if (!same) detail << name << " differs; ";
    pass &= same;
  }
  detail << identical << "/" << runs.size() << " studies identical in-process";

  // Through the command line, with different PRIMCX_THREADS settings.
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      ("primcx_acceptance_" + std::to_string(Rng(std::time(nullptr)).Next()));
  std::filesystem::create_directories(dir);
  const std::vector<std::string> commands = {
      "kopt-scaling --class additive,wmr-uniform --m 64,1024 --seeds 0-5 "
      "--k random",
      "menu-suite --fixtures " + fixtures,
      "adversary-duel --m 16,64",
      "hardness-check --m 6 --seeds 0-4 --trials 300",
      "verify --m 6 --seeds 0-3 --trials 300"};
  int cli_identical = 0;
  for (size_t i = 0; i < commands.size(); ++i) {
    std::string text[2];
    for (int rep = 0; rep < 2; ++rep) {
      const std::filesystem::path out =
          dir / ("run" + std::to_string(i) + "_" + std::to_string(rep) +
                 ".csv");
      const std::string cmd = "PRIMCX_THREADS=" + std::to_string(1 + 2 * rep) +
                              " '" + binary + "' " + commands[i] + " --out '" +
                              out.string() + "' > /dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      text[rep] = status == 0 ? StripWallColumn(ReadFile(out)) : "";
    }
    const bool same = !text[0].empty() && text[0] == text[1];
    cli_identical += same;
    pass &= same;
  }
  std::filesystem::remove_all(dir);
  detail << ", " << cli_identical << "/" << commands.size()
         << " command-line CSVs byte-identical excluding wall_ms";
  return {pass, detail.str()};
}

}  // namespace
}  // namespace primcx

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: primcx_acceptance <primcx binary> <fixture dir>\n";
    return 2;
  }
  const std::string binary = argv[1], fixtures = argv[2];
  using primcx::Verdict;
  const std::vector<std::function<Verdict()>> criteria = {
      primcx::Criterion1, primcx::Criterion2, primcx::Criterion3,
      primcx::Criterion4, [&] { return primcx::Criterion5(fixtures); },
      primcx::Criterion6, primcx::Criterion7, primcx::Criterion8,
      [&] { return primcx::Criterion9(binary, fixtures); }};
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    all &= v.pass;
    std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL")
              << " (" << v.detail << ") [" << static_cast<int>(secs)
              << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
