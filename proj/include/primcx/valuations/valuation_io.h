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

#ifndef PRIMCX_VALUATIONS_VALUATION_IO_H_
#define PRIMCX_VALUATIONS_VALUATION_IO_H_

#include <memory>
#include <vector>

#include "json.hpp"
#include "primcx/core/item_set.h"
#include "primcx/core/rational.h"
#include "primcx/valuations/matroid.h"
#include "primcx/valuations/valuation.h"

namespace primcx {

// JSON forms:
//   {"type":"additive","values":["1/1","2/1"]}
//   {"type":"wmr","matroid":{...},"weights":["5/1","3/1"]}
//   {"type":"hardsub","m":6,"B":[[0,1,2,3]],"G":[0,4,5]}
// Matroids:
//   {"type":"uniform","m":3,"rank":2}
//   {"type":"partition","blocks":[0,0,1],"capacities":[1,1]}
//   {"type":"graphic","vertices":3,"edges":[[0,1],[1,2],[0,2]]}
// Parsing throws ParseError on malformed input.

nlohmann::json RationalToJson(const Rational& x);
Rational RationalFromJson(const nlohmann::json& j);
nlohmann::json ItemSetToJson(const ItemSet& s);
ItemSet ItemSetFromJson(int num_items, const nlohmann::json& j);

nlohmann::json MatroidToJson(const Matroid& matroid);
std::shared_ptr<const Matroid> MatroidFromJson(const nlohmann::json& j);

nlohmann::json ValuationToJson(const Valuation& v);
std::shared_ptr<const Valuation> ValuationFromJson(const nlohmann::json& j);

}  // namespace primcx

#endif  // PRIMCX_VALUATIONS_VALUATION_IO_H_
