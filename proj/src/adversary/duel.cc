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

#include "primcx/adversary/duel.h"

#include <cmath>
#include <vector>

#include "primcx/core/errors.h"

namespace primcx {

int PivotSelectMin(QueryOracle& oracle, int rounds) {
  const int m = oracle.num_items();
  ItemSet candidates = ItemSet::Full(m);
  ItemSet pivots(m);
  int best = -1;
  Rational best_value;
  for (int round = 0; round < rounds; ++round) {
    int pivot = -1;
    for (int j : candidates) {
      if (!pivots.Contains(j)) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) break;
    pivots.Insert(pivot);
    const Rational tau = oracle.Value(ItemSet(m, {pivot}));
    if (best < 0 || tau < best_value) {
      best = pivot;
      best_value = tau;
    }
    const DemandResult above =
        oracle.Demand(PriceVector::UniformOn(candidates, tau));
    for (int j : above.set) candidates.Erase(j);
  }
  if (best >= 0) return best;
  return candidates.size() > 0 ? *candidates.begin() : 0;
}

DuelResult RunPivotSelectDuel(int m, std::ostream* transcript) {
  if (m < 4) throw DomainError("duel needs at least four items");
  AdversaryOracle oracle(m);
  oracle.set_transcript(transcript);
  const int rounds = static_cast<int>(std::sqrt(static_cast<double>(m))) - 1;
  DuelResult out;
  out.m = m;
  out.algorithm = "pivot_select";
  out.guess = PivotSelectMin(oracle, rounds);
  out.value_queries = oracle.ledger().value_queries;
  out.demand_queries = oracle.ledger().demand_queries;
  const AdversaryState& state = oracle.state();
  out.committed = state.num_committed();
  out.rank = state.Rank();
  out.transcript = state.transcript();
  out.certificate = FindAmbiguityCertificate(state);
  out.certificate_found = out.certificate.has_value();
  if (out.certificate) {
    const AmbiguityCertificate& cert = *out.certificate;
    out.min_items_differ = (cert.min_items_x & cert.min_items_y).size() == 0;
    out.witnesses_replay = ReplayTranscript(out.transcript, *cert.x).ok &&
                           ReplayTranscript(out.transcript, *cert.y).ok;
  }
  return out;
}

}  // namespace primcx
