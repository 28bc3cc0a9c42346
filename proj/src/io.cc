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

#include "corefringe/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

#include "corefringe/errors.h"

namespace corefringe {

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& message)
    : std::runtime_error(line ? source + ":" + std::to_string(line) + ": " + message
                              : source + ": " + message),
      source_(source),
      line_(line) {}

namespace {

// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> tokens;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tokens.clear();
    std::string_view rest = line;
    while (true) {
      const auto start = rest.find_first_not_of(" \t");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto end = rest.find_first_of(" \t");
      tokens.push_back(rest.substr(0, end));
      if (end == std::string_view::npos) break;
      rest.remove_prefix(end);
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    fn(line_no, tokens);
  }
}

template <class T>
bool parse_number(std::string_view s, T& value) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && p == s.data() + s.size();
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

}  // namespace

GroupTable::GroupTable(std::map<std::string, std::string> membership,
                       std::map<std::string, GeoPoint> meta)
    : membership_(std::move(membership)), meta_(std::move(meta)) {
  for (const auto& [group, point] : meta_) {
    if (!(point.latitude >= -90 && point.latitude <= 90) ||
        !(point.longitude >= -180 && point.longitude <= 180)) {
      throw InvalidArgument("coordinates of group '" + group + "' out of range");
    }
  }
}

std::optional<std::string> GroupTable::group_of(const std::string& node) const {
  auto it = membership_.find(node);
  if (it == membership_.end()) return std::nullopt;
  return it->second;
}

std::optional<GeoPoint> GroupTable::center(const std::string& group) const {
  auto it = meta_.find(group);
  if (it == meta_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> GroupTable::unused_meta_groups() const {
  std::unordered_set<std::string> used;
  for (const auto& [node, group] : membership_) used.insert(group);
  std::vector<std::string> out;
  for (const auto& [group, point] : meta_) {
    if (!used.contains(group)) out.push_back(group);
  }
  return out;
}

std::vector<RawEdge> parse_edges(std::istream& in, const std::string& source) {
  std::vector<RawEdge> edges;
  std::optional<bool> timed;
  for_each_record(in, [&](std::size_t line_no,
                          const std::vector<std::string_view>& tokens) {
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(source, line_no, "expected 'u v [t]'");
    }
    const bool has_time = tokens.size() == 3;
    if (timed && *timed != has_time) {
      throw ParseError(source, line_no, "mixed timed and untimed edges");
    }
    timed = has_time;
    RawEdge e{std::string(tokens[0]), std::string(tokens[1]), std::nullopt};
    if (has_time) {
      Timestamp t = 0;
      if (!parse_number(tokens[2], t)) {
        throw ParseError(source, line_no,
                         "bad timestamp '" + std::string(tokens[2]) + "'");
      }
      e.timestamp = t;
    }
    edges.push_back(std::move(e));
  });
  return edges;
}

std::vector<RawEdge> load_edges(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_edges(in, path.string());
}

std::vector<std::string> parse_core(std::istream& in, const std::string& source) {
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  for_each_record(in, [&](std::size_t line_no,
                          const std::vector<std::string_view>& tokens) {
    if (tokens.size() != 1) {
      throw ParseError(source, line_no, "expected one label per line");
    }
    std::string label(tokens[0]);
    if (seen.insert(label).second) labels.push_back(std::move(label));
  });
  return labels;
}

std::vector<std::string> load_core(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_core(in, path.string());
}

GroupTable parse_groups(std::istream& membership, std::istream* meta,
                        const std::string& source) {
  std::map<std::string, std::string> groups;
  for_each_record(membership, [&](std::size_t line_no,
                                  const std::vector<std::string_view>& tokens) {
    if (tokens.size() != 2) {
      throw ParseError(source, line_no, "expected 'node group'");
    }
    auto [it, inserted] =
        groups.try_emplace(std::string(tokens[0]), std::string(tokens[1]));
    if (!inserted && it->second != tokens[1]) {
      throw ParseError(source, line_no,
                       "node '" + it->first + "' assigned to groups '" +
                           it->second + "' and '" + std::string(tokens[1]) + "'");
    }
  });

  std::map<std::string, GeoPoint> centers;
  if (meta != nullptr) {
    const std::string meta_source = source + " (meta)";
    for_each_record(*meta, [&](std::size_t line_no,
                               const std::vector<std::string_view>& tokens) {
      if (tokens.size() != 3) {
        throw ParseError(meta_source, line_no, "expected 'group lat lon'");
      }
      GeoPoint point;
      if (!parse_number(tokens[1], point.latitude) ||
          !parse_number(tokens[2], point.longitude)) {
        throw ParseError(meta_source, line_no, "bad coordinate");
      }
      if (!(point.latitude >= -90 && point.latitude <= 90)) {
        throw ParseError(meta_source, line_no, "latitude out of [-90, 90]");
      }
      if (!(point.longitude >= -180 && point.longitude <= 180)) {
        throw ParseError(meta_source, line_no, "longitude out of [-180, 180]");
      }
      if (!centers.try_emplace(std::string(tokens[0]), point).second) {
        throw ParseError(meta_source, line_no,
                         "duplicate group '" + std::string(tokens[0]) + "'");
      }
    });
  }
  return GroupTable(std::move(groups), std::move(centers));
}

GroupTable load_groups(const std::filesystem::path& groups,
                       const std::optional<std::filesystem::path>& meta) {
  auto in = open_or_throw(groups);
  if (!meta) return parse_groups(in, nullptr, groups.string());
  auto meta_in = open_or_throw(*meta);
  return parse_groups(in, &meta_in, groups.string());
}

void write_edges(std::ostream& out, std::span<const RawEdge> edges) {
  for (const auto& e : edges) {
    out << e.u << ' ' << e.v;
    if (e.timestamp) out << ' ' << *e.timestamp;
    out << '\n';
  }
}

void write_edges(std::ostream& out, const CoreFringeGraph& g) {
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v);
    if (e.timestamp) out << ' ' << *e.timestamp;
    out << '\n';
  }
}

void write_core(std::ostream& out, const CoreFringeGraph& g) {
  for (NodeIndex x : g.core_nodes()) out << g.label(x) << '\n';
}

}  // namespace corefringe
