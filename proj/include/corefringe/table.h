// Copyright 2026 The Corefringe Authors.
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

#ifndef COREFRINGE_TABLE_H_
#define COREFRINGE_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace corefringe {

using Cell = std::variant<std::int64_t, double, std::string>;

// Column-named rows, the output format of every CLI command.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { kCsv, kJson };

// Shortest representation that parses back to the same double; never depends
// on the C locale.
std::string format_double(double value);

void write_csv(std::ostream& out, const Table& table);
// Array of row objects keyed by column name.
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, OutputFormat format);

// Cells that parse fully as integers become int64, other numbers double,
// everything else string. Throws ParseError on ragged rows.
Table read_csv(std::istream& in, const std::string& source = "<csv>");

}  // namespace corefringe

#endif  // COREFRINGE_TABLE_H_
