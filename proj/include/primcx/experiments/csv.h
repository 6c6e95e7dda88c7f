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

#ifndef PRIMCX_EXPERIMENTS_CSV_H_
#define PRIMCX_EXPERIMENTS_CSV_H_

#include <string>
#include <vector>

#include "primcx/core/rational.h"

namespace primcx {

// Name of the one column excluded from determinism comparisons. When
// present it is the last column.
inline constexpr char kWallColumn[] = "wall_ms";

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws StructuralError if the width differs from the header.
  void AddRow(std::vector<std::string> row);
  // Comma-separated with a trailing newline per line. Fields containing a
  // comma, quote or newline are quoted. `with_wall` false drops a trailing
  // wall-clock column.
  std::string Render(bool with_wall = true) const;
};

// Writes the table to `path` ("-" means stdout). Throws ParseError when the
// file cannot be opened.
void WriteCsv(const CsvTable& table, const std::string& path);

// Drops a trailing wall-clock column from rendered CSV text.
std::string StripWallColumn(const std::string& csv_text);

// Shortest round-trip decimal of x's double approximation, "inf" for
// infinity.
std::string FloatColumn(const Rational& x);
std::string FloatColumn(double x);
std::string BoolColumn(bool b);

}  // namespace primcx

#endif  // PRIMCX_EXPERIMENTS_CSV_H_
