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

#include "primcx/menus/fixture.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "primcx/core/errors.h"
#include "primcx/valuations/valuation_io.h"

namespace primcx {

MenuFixture MenuFixtureFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string() ||
      !j.contains("eps") || !j.contains("menu") ||
      !j.contains("distribution")) {
    throw ParseError("fixture needs 'name', 'eps', 'menu', 'distribution'");
  }
  Rational eps = RationalFromJson(j["eps"]);
  if (eps.is_infinite() || eps.sign() <= 0) {
    throw ParseError("fixture eps must be positive");
  }
  return {j["name"].get<std::string>(), eps, MenuFromJson(j["menu"]),
          DistributionFromJson(j["distribution"])};
}

MenuFixture LoadMenuFixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& error) {
    throw ParseError(path + ": " + error.what());
  }
  return MenuFixtureFromJson(j);
}

std::vector<MenuFixture> LoadMenuFixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code error;
  if (!fs::is_directory(dir, error)) {
    throw ParseError("fixture directory not found: " + dir);
  }
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<MenuFixture> fixtures;
  for (const std::string& path : paths) {
    fixtures.push_back(LoadMenuFixture(path));
  }
  return fixtures;
}

}  // namespace primcx
