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

#ifndef PRIMCX_EXPERIMENTS_CONFIG_H_
#define PRIMCX_EXPERIMENTS_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primcx/core/rational.h"

namespace primcx {

// Parameters of one experiment run. Together with the binary version it
// pins every CSV row. Fields left empty take per-subcommand defaults.
struct ExperimentConfig {
  std::string subcommand;
  std::vector<int> m;
  // An integer, "all" (0..m), "half" (floor(m/2)) or "random" (uniform in
  // 0..m per seed).
  std::string k = "half";
  std::vector<uint64_t> seeds;
  std::vector<Rational> eps;
  int64_t trials = -1;  // -1: subcommand default.
  std::string tie = "lexmin";
  // Valuation classes, e.g. "additive", "wmr-partition".
  std::vector<std::string> classes;
  std::string out;
  std::string fixtures;
  int threads = 1;

  nlohmann::json ToJson() const;
  static ExperimentConfig FromJson(const nlohmann::json& j);
};

// "3", "0-99" (inclusive), or comma-separated mixes. Throws ParseError.
std::vector<uint64_t> ParseSeedList(std::string_view text);
// Comma-separated integers; "2^k" is accepted for powers of two. Throws
// ParseError.
std::vector<int> ParseSizeList(std::string_view text);
// Comma-separated rationals ("1/4,0.5" style decimals are not accepted).
std::vector<Rational> ParseRationalList(std::string_view text);

// PRIMCX_THREADS if set to a positive integer, else 1.
int ThreadsFromEnvironment();

// The k values to run for ground-set size m under `policy`; `rng_seed`
// drives "random". Throws ParseError on an unknown policy.
std::vector<int> KValues(std::string_view policy, int m, uint64_t rng_seed);

}  // namespace primcx

#endif  // PRIMCX_EXPERIMENTS_CONFIG_H_
