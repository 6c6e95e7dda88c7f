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

#ifndef PRIMCX_ADVERSARY_DUEL_H_
#define PRIMCX_ADVERSARY_DUEL_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "primcx/adversary/adversary.h"
#include "primcx/oracles/oracle.h"

namespace primcx {

// Deterministic QuickSelect analog for the minimum-value item of an
// additive valuation. Each round spends one value query on the pivot (the
// lowest-index candidate not yet used as a pivot) and one demand query
// pricing the candidates at the pivot's value, infinity elsewhere; the
// demanded items are strictly above the pivot and are discarded. Stops
// after `rounds` rounds or when every candidate has been a pivot. Returns
// the guessed minimum item.
int PivotSelectMin(QueryOracle& oracle, int rounds);

struct DuelResult {
  int m = 0;
  std::string algorithm;
  int64_t value_queries = 0;
  int64_t demand_queries = 0;
  int guess = -1;
  int committed = 0;
  int rank = 0;
  bool certificate_found = false;
  bool min_items_differ = false;
  bool witnesses_replay = false;
  std::vector<AdversaryQuery> transcript;
  std::optional<AmbiguityCertificate> certificate;

  bool ambiguity_preserved() const {
    return certificate_found && min_items_differ && witnesses_replay;
  }
};

// Runs PivotSelectMin for floor(sqrt(m)) - 1 rounds against a fresh
// adversary, then extracts and replays the ambiguity certificate.
// `transcript`, if given, receives the queries as JSON lines.
DuelResult RunPivotSelectDuel(int m, std::ostream* transcript = nullptr);

}  // namespace primcx

#endif  // PRIMCX_ADVERSARY_DUEL_H_
