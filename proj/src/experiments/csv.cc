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

#include "primcx/experiments/csv.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "primcx/core/errors.h"

namespace primcx {
namespace {

std::string Quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits one CSV line into fields, honoring quotes.
std::vector<std::string> SplitLine(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += "\"\"";
        ++i;
      } else if (c == '"') {
        quoted = false;
        fields.back() += c;
      } else {
        fields.back() += c;
      }
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      if (c == '"') quoted = true;
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace

void CsvTable::AddRow(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw StructuralError("CSV row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string CsvTable::Render(bool with_wall) const {
  const bool drop =
      !with_wall && !header.empty() && header.back() == kWallColumn;
  const size_t width = header.size() - (drop ? 1 : 0);
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (size_t i = 0; i < width; ++i) {
      out << (i ? "," : "") << Quote(fields[i]);
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

void WriteCsv(const CsvTable& table, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << table.Render();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << table.Render();
  if (!out) throw ParseError("failed writing " + path);
}

std::string StripWallColumn(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line)) return csv_text;
  std::vector<std::string> header = SplitLine(line);
  if (header.back() != kWallColumn) return csv_text;
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (size_t i = 0; i + 1 < fields.size(); ++i) {
      out << (i ? "," : "") << fields[i];
    }
    out << '\n';
  };
  emit(header);
  while (std::getline(in, line)) emit(SplitLine(line));
  return out.str();
}

std::string FloatColumn(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

std::string FloatColumn(const Rational& x) {
  if (x.is_infinite()) return "inf";
  return FloatColumn(x.ToDouble());
}

std::string BoolColumn(bool b) { return b ? "true" : "false"; }

}  // namespace primcx
