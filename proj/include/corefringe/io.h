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

// Plain-text formats:
//
//   edges   "u v [t]" per line, whitespace separated; t is a 64-bit integer
//           and is either present on every record or on none.
//   core    one node label per line.
//   groups  "node group" per line.
//   meta    "group latitude longitude" per line, decimal degrees.
//
// Blank lines and lines whose first non-blank character is '#' are skipped in
// every format. '\n' and "\r\n" line endings are accepted.

#ifndef COREFRINGE_IO_H_
#define COREFRINGE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corefringe/graph.h"

namespace corefringe {

struct GeoPoint {
  double latitude = 0;
  double longitude = 0;
};

// Node → group membership plus optional group coordinates.
class GroupTable {
 public:
  GroupTable() = default;
  // Throws InvalidArgument on out-of-range coordinates.
  GroupTable(std::map<std::string, std::string> membership,
             std::map<std::string, GeoPoint> meta);

  const std::map<std::string, std::string>& membership() const {
    return membership_;
  }
  const std::map<std::string, GeoPoint>& meta() const { return meta_; }

  std::optional<std::string> group_of(const std::string& node) const;
  std::optional<GeoPoint> center(const std::string& group) const;
  bool has_coordinates() const { return !meta_.empty(); }

  // Groups with coordinates but no members.
  std::vector<std::string> unused_meta_groups() const;

 private:
  std::map<std::string, std::string> membership_;
  std::map<std::string, GeoPoint> meta_;
};

std::vector<RawEdge> parse_edges(std::istream& in,
                                 const std::string& source = "<edges>");
std::vector<RawEdge> load_edges(const std::filesystem::path& path);

// Labels in file order, duplicates removed.
std::vector<std::string> parse_core(std::istream& in,
                                    const std::string& source = "<core>");
std::vector<std::string> load_core(const std::filesystem::path& path);

// `meta` may be null. A node listed twice with different groups, or a
// coordinate outside [-90, 90] x [-180, 180], is a ParseError.
GroupTable parse_groups(std::istream& membership, std::istream* meta,
                        const std::string& source = "<groups>");
GroupTable load_groups(const std::filesystem::path& groups,
                       const std::optional<std::filesystem::path>& meta);

void write_edges(std::ostream& out, std::span<const RawEdge> edges);
// Canonical edges of `g` by label, in edge order.
void write_edges(std::ostream& out, const CoreFringeGraph& g);
void write_core(std::ostream& out, const CoreFringeGraph& g);

}  // namespace corefringe

#endif  // COREFRINGE_IO_H_
