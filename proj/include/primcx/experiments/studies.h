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

#ifndef PRIMCX_EXPERIMENTS_STUDIES_H_
#define PRIMCX_EXPERIMENTS_STUDIES_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "primcx/experiments/config.h"
#include "primcx/experiments/csv.h"

namespace primcx {

// A CSV plus the checked guarantees that failed while producing it.
struct StudyResult {
  CsvTable table;
  int64_t violations = 0;
  std::vector<std::string> messages;  // One per violation, capped at 20.

  void Violation(std::string message);
};

// k-optimal query counts. Rows (class, m, k, seed): queries spent, the
// value found, and correctness against brute force (m <= 20) or, for
// additive instances, the sorted top-k sum. Defaults: m = 2^10, 2^12,
// 2^14, 2^17; seeds 0-99; class additive; k half.
StudyResult RunKoptScaling(const ExperimentConfig& cfg);

// Per menu fixture and eps: expected revenue of the original menu, the
// rounded and pruned menus and the deployed implementation, and an exact
// check of the buyer algorithm against brute-force choices on every
// support point. Needs cfg.fixtures. Throws ParseError on a bad fixture.
StudyResult RunMenuSuite(const ExperimentConfig& cfg);

// Pivot-selection duels against the adversary, cfg.trials per m (default
// 1). Defaults: m = 16, 64, 256. Transcripts go to `transcripts` as JSON
// lines tagged with "m" when non-null.
StudyResult RunAdversaryDuels(const ExperimentConfig& cfg,
                              std::ostream* transcripts = nullptr);

// Hard-family checks per m: submodularity, uniqueness of G and two
// value-query baselines over one valuation per seed (default 0-49); the
// size-k claim and size-k family sizes over cfg.trials random price
// vectors (default 10^4). Defaults: m = 6, 8, 10.
StudyResult RunHardnessCheck(const ExperimentConfig& cfg);

enum class VerifyScope { kAll, kKOptimal, kDemand };

// Small-instance invariant corpus under every tie policy: additive
// k-optimal correctness (m = 4..12), matroid k-optimal and max-weight
// independent set correctness (m = 1..10), and demand soundness against
// enumeration (cfg.trials triples per class, m <= 16). Default seeds
// 0-199, trials 10^4. `scope` restricts the run to one part.
StudyResult RunVerify(const ExperimentConfig& cfg,
                      VerifyScope scope = VerifyScope::kAll);

}  // namespace primcx

#endif  // PRIMCX_EXPERIMENTS_STUDIES_H_
