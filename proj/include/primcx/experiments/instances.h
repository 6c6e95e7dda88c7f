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

#ifndef PRIMCX_EXPERIMENTS_INSTANCES_H_
#define PRIMCX_EXPERIMENTS_INSTANCES_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "primcx/core/price_vector.h"
#include "primcx/core/rng.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

// Random instance generators shared by the experiments.
//
// Class names: "additive", "wmr-uniform", "wmr-partition", "wmr-graphic",
// "hard" (the hard submodular family; needs even m in 4..24).

// Large-scale instances: integer weights uniform in [1, 2^20]; partition
// matroids with blocks of expected size 8 and capacities in [1, 8];
// uniform matroids of rank in [1, m]; graphic matroids on ceil(m/4) + 1
// vertices.
std::shared_ptr<const Valuation> ScalingInstance(std::string_view cls, int m,
                                                 Rng& rng);

// Small tie-heavy instances: additive values from {0, 1, 2, 3}/2; matroid
// weights from {0, ..., 4}/3 (duplicates common); uniform rank in [0, m],
// partition with up to 4 blocks of capacity 0..2, graphic on up to 5
// vertices (loops and parallel edges allowed).
std::shared_ptr<const Valuation> CorpusInstance(std::string_view cls, int m,
                                                Rng& rng);

// Prices from {0, 1/2, ..., 7/2} with a 1-in-9 chance of infinity per item.
PriceVector CorpusPrices(int m, Rng& rng);

// Throws ParseError unless `cls` is a known class name.
void CheckClassName(std::string_view cls);
bool IsWmrClass(std::string_view cls);

}  // namespace primcx

#endif  // PRIMCX_EXPERIMENTS_INSTANCES_H_
