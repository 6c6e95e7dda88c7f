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

#include "primcx/experiments/config.h"

#include <charconv>
#include <cstdlib>

#include "primcx/core/errors.h"
#include "primcx/core/rng.h"
#include "primcx/valuations/valuation_io.h"

namespace primcx {
namespace {

std::vector<std::string_view> SplitCommas(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(start, comma - start);
    if (!part.empty()) parts.push_back(part);
    start = comma + 1;
  }
  return parts;
}

uint64_t ParseUnsigned(std::string_view text) {
  uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("not a non-negative integer: " + std::string(text));
  }
  return value;
}

}  // namespace

std::vector<uint64_t> ParseSeedList(std::string_view text) {
  std::vector<uint64_t> seeds;
  for (std::string_view part : SplitCommas(text)) {
    const size_t dash = part.find('-');
    if (dash == std::string_view::npos) {
      seeds.push_back(ParseUnsigned(part));
      continue;
    }
    const uint64_t lo = ParseUnsigned(part.substr(0, dash));
    const uint64_t hi = ParseUnsigned(part.substr(dash + 1));
    if (hi < lo || hi - lo > 100000000) {
      throw ParseError("bad seed range: " + std::string(part));
    }
    for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw ParseError("empty seed list");
  return seeds;
}

std::vector<int> ParseSizeList(std::string_view text) {
  std::vector<int> sizes;
  for (std::string_view part : SplitCommas(text)) {
    uint64_t value;
    if (part.size() > 2 && part.substr(0, 2) == "2^") {
      const uint64_t e = ParseUnsigned(part.substr(2));
      if (e > 30) throw ParseError("size too large: " + std::string(part));
      value = uint64_t{1} << e;
    } else {
      value = ParseUnsigned(part);
    }
    if (value > (uint64_t{1} << 30)) {
      throw ParseError("size too large: " + std::string(part));
    }
    sizes.push_back(static_cast<int>(value));
  }
  if (sizes.empty()) throw ParseError("empty size list");
  return sizes;
}

std::vector<Rational> ParseRationalList(std::string_view text) {
  std::vector<Rational> out;
  for (std::string_view part : SplitCommas(text)) {
    out.push_back(Rational::Parse(part));
  }
  if (out.empty()) throw ParseError("empty rational list");
  return out;
}

int ThreadsFromEnvironment() {
  const char* env = std::getenv("PRIMCX_THREADS");
  if (env == nullptr) return 1;
  int value = 0;
  std::string_view text(env);
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    return 1;
  }
  return value;
}

std::vector<int> KValues(std::string_view policy, int m, uint64_t rng_seed) {
  if (policy == "all") {
    std::vector<int> ks(m + 1);
    for (int k = 0; k <= m; ++k) ks[k] = k;
    return ks;
  }
  if (policy == "half") return {m / 2};
  if (policy == "random") {
    Rng rng(rng_seed);
    return {static_cast<int>(rng.UniformInt(static_cast<uint64_t>(m) + 1))};
  }
  const uint64_t k = ParseUnsigned(policy);
  if (k > static_cast<uint64_t>(m)) {
    throw ParseError("k exceeds m: " + std::string(policy));
  }
  return {static_cast<int>(k)};
}

nlohmann::json ExperimentConfig::ToJson() const {
  nlohmann::json eps_json = nlohmann::json::array();
  for (const Rational& e : eps) eps_json.push_back(RationalToJson(e));
  return {{"subcommand", subcommand}, {"m", m},         {"k", k},
          {"seeds", seeds},           {"eps", eps_json}, {"trials", trials},
          {"tie", tie},               {"classes", classes},
          {"out", out},               {"fixtures", fixtures},
          {"threads", threads}};
}

ExperimentConfig ExperimentConfig::FromJson(const nlohmann::json& j) {
  try {
    ExperimentConfig c;
    c.subcommand = j.at("subcommand").get<std::string>();
    c.m = j.at("m").get<std::vector<int>>();
    c.k = j.at("k").get<std::string>();
    c.seeds = j.at("seeds").get<std::vector<uint64_t>>();
    for (const auto& e : j.at("eps")) c.eps.push_back(RationalFromJson(e));
    c.trials = j.at("trials").get<int64_t>();
    c.tie = j.at("tie").get<std::string>();
    c.classes = j.at("classes").get<std::vector<std::string>>();
    c.out = j.at("out").get<std::string>();
    c.fixtures = j.at("fixtures").get<std::string>();
    c.threads = j.at("threads").get<int>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad experiment config: ") + e.what());
  }
}

}  // namespace primcx
