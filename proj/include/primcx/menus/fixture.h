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

#ifndef PRIMCX_MENUS_FIXTURE_H_
#define PRIMCX_MENUS_FIXTURE_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "primcx/core/rational.h"
#include "primcx/menus/distribution.h"
#include "primcx/menus/menu.h"

namespace primcx {

// A menu study input:
//   {"name":"...","eps":"1/4","menu":{...},"distribution":{...}}
struct MenuFixture {
  std::string name;
  Rational eps;
  BundleSizeMenu menu;
  ValuationDistribution distribution;
};

// Throws ParseError on malformed input or an unreadable file.
MenuFixture MenuFixtureFromJson(const nlohmann::json& j);
MenuFixture LoadMenuFixture(const std::string& path);
// Every *.json file in `dir`, in file-name order.
std::vector<MenuFixture> LoadMenuFixtures(const std::string& dir);

}  // namespace primcx

#endif  // PRIMCX_MENUS_FIXTURE_H_
