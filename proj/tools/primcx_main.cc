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

// Command-line experiment runner.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "primcx/core/errors.h"
#include "primcx/experiments/config.h"
#include "primcx/experiments/csv.h"
#include "primcx/experiments/studies.h"

namespace primcx {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct RawFlags {
  std::string m, k = "half", eps, seeds, tie = "lexmin", out, fixtures;
  std::string classes;
  int64_t trials = -1;
};

ExperimentConfig ToConfig(const std::string& subcommand, const RawFlags& f) {
  ExperimentConfig cfg;
  cfg.subcommand = subcommand;
  if (!f.m.empty()) cfg.m = ParseSizeList(f.m);
  cfg.k = f.k;
  if (!f.seeds.empty()) cfg.seeds = ParseSeedList(f.seeds);
  if (!f.eps.empty()) cfg.eps = ParseRationalList(f.eps);
  cfg.trials = f.trials;
  cfg.tie = f.tie;
  if (!f.classes.empty()) {
    std::string item;
    for (char c : f.classes + ",") {
      if (c == ',') {
        if (!item.empty()) cfg.classes.push_back(item);
        item.clear();
      } else {
        item += c;
      }
    }
  }
  cfg.out = f.out;
  cfg.fixtures = f.fixtures;
  cfg.threads = ThreadsFromEnvironment();
  return cfg;
}

void WriteSidecar(const std::string& out, const std::string& suffix,
                  const std::string& text) {
  std::ofstream file(out + suffix, std::ios::binary);
  if (!file) throw ParseError("cannot open " + out + suffix);
  file << text;
}

int Run(const ExperimentConfig& cfg, bool m_flag_given) {
  if (m_flag_given && cfg.m.empty()) throw ParseError("empty m list");
  const bool to_file = !cfg.out.empty() && cfg.out != "-";
  StudyResult result;
  if (cfg.subcommand == "kopt-scaling") {
    result = RunKoptScaling(cfg);
  } else if (cfg.subcommand == "menu-suite") {
    result = RunMenuSuite(cfg);
  } else if (cfg.subcommand == "adversary-duel") {
    std::optional<std::ofstream> transcripts;
    if (to_file) {
      transcripts.emplace(cfg.out + ".transcript.jsonl", std::ios::binary);
      if (!*transcripts) throw ParseError("cannot open transcript file");
    }
    result = RunAdversaryDuels(cfg, transcripts ? &*transcripts : nullptr);
  } else if (cfg.subcommand == "hardness-check") {
    result = RunHardnessCheck(cfg);
  } else {
    result = RunVerify(cfg);
  }
  WriteCsv(result.table, cfg.out);
  if (to_file) {
    nlohmann::json meta = cfg.ToJson();
    meta["version"] = PRIMCX_VERSION;
    WriteSidecar(cfg.out, ".config.json", meta.dump(2) + "\n");
  }
  if (result.violations > 0) {
    std::cerr << "primcx: " << result.violations
              << " guarantee violation(s) detected\n";
    for (const std::string& m : result.messages) std::cerr << "  " << m << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace
}  // namespace primcx

int main(int argc, char** argv) {
  using primcx::RawFlags;
  CLI::App app{"Query-counted k-optimal, menu and hardness experiments"};
  app.set_version_flag("--version", std::string(PRIMCX_VERSION));
  app.require_subcommand(1);
  RawFlags flags;
  bool m_given = false;
  const std::pair<const char*, const char*> commands[] = {
      {"kopt-scaling", "Query counts of the k-optimal algorithms"},
      {"menu-suite", "Revenue of rounded, pruned and deployed menus"},
      {"adversary-duel", "Pivot selection against the adaptive adversary"},
      {"hardness-check", "Hard submodular family checks and baselines"},
      {"verify", "Small-instance invariant corpus under every tie policy"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option_function<std::string>(
        "--m", [&](const std::string& v) { flags.m = v; m_given = true; },
        "Ground-set sizes, comma separated; 2^k allowed");
    sub->add_option("--k", flags.k, "k: integer, all, half or random");
    sub->add_option("--eps", flags.eps, "Comma-separated rationals");
    sub->add_option("--seeds", flags.seeds, "Seeds: 7, 0-99 or lists");
    sub->add_option("--trials", flags.trials, "Trial count");
    sub->add_option("--tie", flags.tie,
                    "lexmin, lexmax, random:<seed>, adversarial:<seed>");
    sub->add_option("--class", flags.classes,
                    "Valuation classes: additive, wmr-uniform, "
                    "wmr-partition, wmr-graphic, hard");
    sub->add_option("--out", flags.out, "Output CSV path (default stdout)");
    sub->add_option("--fixtures", flags.fixtures,
                    "Menu fixture file or directory");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : primcx::kExitUsage;
  }
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    return primcx::Run(primcx::ToConfig(name, flags), m_given);
  } catch (const primcx::InvariantViolation& e) {
    std::cerr << "primcx: invariant violation: " << e.what() << "\n";
    return primcx::kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "primcx: " << e.what() << "\n";
    return primcx::kExitUsage;
  }
}
