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

#include "primcx/valuations/valuation_io.h"

#include <bit>

#include "primcx/core/errors.h"
#include "primcx/valuations/hard_submodular.h"
#include "primcx/valuations/weighted_matroid_rank.h"

namespace primcx {
namespace {

using nlohmann::json;

const json& Field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::vector<Rational> RationalList(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(RationalFromJson(x));
  return out;
}

json RationalList(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const Rational& x : xs) out.push_back(x.ToString());
  return out;
}

int AsInt(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer");
  return j.get<int>();
}

std::vector<int> IntList(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<int> out;
  for (const json& x : j) out.push_back(AsInt(x));
  return out;
}

uint32_t MaskFromJson(int num_items, const json& j) {
  uint32_t mask = 0;
  for (int item : IntList(j)) {
    if (item < 0 || item >= num_items) throw ParseError("item out of range");
    mask |= uint32_t{1} << item;
  }
  return mask;
}

json MaskToJson(int num_items, uint32_t mask) {
  json out = json::array();
  for (int i = 0; i < num_items; ++i) {
    if (mask & (uint32_t{1} << i)) out.push_back(i);
  }
  return out;
}

}  // namespace

json RationalToJson(const Rational& x) { return x.ToString(); }

Rational RationalFromJson(const json& j) {
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  throw ParseError("expected a rational string like \"3/2\"");
}

json ItemSetToJson(const ItemSet& s) {
  json out = json::array();
  for (int item : s) out.push_back(item);
  return out;
}

ItemSet ItemSetFromJson(int num_items, const json& j) {
  ItemSet s(num_items);
  for (int item : IntList(j)) {
    if (item < 0 || item >= num_items) throw ParseError("item out of range");
    s.Insert(item);
  }
  return s;
}

json MatroidToJson(const Matroid& matroid) {
  if (auto* u = dynamic_cast<const UniformMatroid*>(&matroid)) {
    return {{"type", "uniform"}, {"m", u->num_items()}, {"rank", u->rank()}};
  }
  if (auto* p = dynamic_cast<const PartitionMatroid*>(&matroid)) {
    return {{"type", "partition"},
            {"blocks", p->block_of()},
            {"capacities", p->capacities()}};
  }
  if (auto* g = dynamic_cast<const GraphicMatroid*>(&matroid)) {
    json edges = json::array();
    for (const auto& [u, v] : g->edges()) edges.push_back({u, v});
    return {{"type", "graphic"},
            {"vertices", g->num_vertices()},
            {"edges", edges}};
  }
  throw CapabilityError("matroid type has no JSON form");
}

std::shared_ptr<const Matroid> MatroidFromJson(const json& j) {
  const std::string type = Field(j, "type").get<std::string>();
  if (type == "uniform") {
    return std::make_shared<UniformMatroid>(AsInt(Field(j, "m")),
                                            AsInt(Field(j, "rank")));
  }
  if (type == "partition") {
    return std::make_shared<PartitionMatroid>(IntList(Field(j, "blocks")),
                                              IntList(Field(j, "capacities")));
  }
  if (type == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const json& e : Field(j, "edges")) {
      std::vector<int> ends = IntList(e);
      if (ends.size() != 2) throw ParseError("edge needs two endpoints");
      edges.emplace_back(ends[0], ends[1]);
    }
    return std::make_shared<GraphicMatroid>(AsInt(Field(j, "vertices")),
                                            std::move(edges));
  }
  throw ParseError("unknown matroid type '" + type + "'");
}

json ValuationToJson(const Valuation& v) {
  if (auto* a = dynamic_cast<const AdditiveValuation*>(&v)) {
    return {{"type", "additive"}, {"values", RationalList(a->values())}};
  }
  if (auto* w = dynamic_cast<const WeightedMatroidRankValuation*>(&v)) {
    return {{"type", "wmr"},
            {"matroid", MatroidToJson(w->matroid())},
            {"weights", RationalList(w->weights())}};
  }
  if (auto* h = dynamic_cast<const HardSubmodularValuation*>(&v)) {
    json b = json::array();
    for (uint32_t mask : h->b_family()) b.push_back(MaskToJson(h->num_items(), mask));
    return {{"type", "hardsub"},
            {"m", h->num_items()},
            {"B", b},
            {"G", MaskToJson(h->num_items(), h->g_mask())}};
  }
  throw CapabilityError("valuation type has no JSON form");
}

std::shared_ptr<const Valuation> ValuationFromJson(const json& j) {
  const std::string type = Field(j, "type").get<std::string>();
  if (type == "additive") {
    return std::make_shared<AdditiveValuation>(RationalList(Field(j, "values")));
  }
  if (type == "wmr") {
    return std::make_shared<WeightedMatroidRankValuation>(
        MatroidFromJson(Field(j, "matroid")), RationalList(Field(j, "weights")));
  }
  if (type == "hardsub") {
    int m = AsInt(Field(j, "m"));
    if (m < 0 || m > HardSubmodularValuation::kMaxItems) {
      throw ParseError("hardsub m out of range");
    }
    std::vector<uint32_t> b;
    for (const json& set : Field(j, "B")) b.push_back(MaskFromJson(m, set));
    return std::make_shared<HardSubmodularValuation>(m, std::move(b),
                                                     MaskFromJson(m, Field(j, "G")));
  }
  throw ParseError("unknown valuation type '" + type + "'");
}

}  // namespace primcx
