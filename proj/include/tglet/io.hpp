// Copyright 2026 the tglet authors
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

#ifndef TGLET_IO_HPP
#define TGLET_IO_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tglet/aggregate.hpp"
#include "tglet/common.hpp"
#include "tglet/engine.hpp"
#include "tglet/graph.hpp"
#include "tglet/motif.hpp"

// On-disk sparse result format:
//   counts file — one line per edge, "u v id:count id:count ...", original
//     node labels, entries ascending by id, lines sorted by (u,v);
//   lookup file — "id name k edges type_multiset" per line, ids consecutive
//     from 1 in canonical key order.
// The pair of files reconstructs the in-memory sparse maps exactly.

namespace tglet {

/// Consecutive ids (from 1) for the motifs that occur, in canonical key
/// order. The same remap must be used for the counts and lookup files.
struct MotifIdTable {
  std::vector<MotifKey> keys;  // sorted; id = index + 1
  std::unordered_map<std::uint64_t, std::uint32_t> id;

  explicit MotifIdTable(const std::vector<MotifKey>& sorted_keys)
      : keys(sorted_keys) {
    id.reserve(keys.size());
    for (std::size_t a = 0; a < keys.size(); ++a)
      id.emplace(keys[a].value, static_cast<std::uint32_t>(a + 1));
  }
};

namespace io_detail {

// lines ordered by original (min,max) label; precomputed order over edge ids
inline std::vector<edge_id> edge_output_order(const HeteroGraph& g) {
  std::vector<edge_id> order(g.num_edges);
  for (edge_id e = 0; e < g.num_edges; ++e) order[e] = e;
  std::vector<std::pair<std::int64_t, std::int64_t>> label(g.num_edges);
  for (edge_id e = 0; e < g.num_edges; ++e) {
    auto [i, j] = g.edge_list[e];
    std::int64_t u = g.node_label[i], v = g.node_label[j];
    if (u > v) std::swap(u, v);
    label[e] = {u, v};
  }
  std::sort(order.begin(), order.end(),
            [&](edge_id a, edge_id b) { return label[a] < label[b]; });
  return order;
}

}  // namespace io_detail

inline void write_counts_file(std::ostream& os, const HeteroGraph& g,
                              const std::vector<EdgeLocalCounts>& per_edge,
                              const MotifIdTable& table) {
  for (edge_id e : io_detail::edge_output_order(g)) {
    const auto [i, j] = g.edge_list[e];
    std::int64_t u = g.node_label[i], v = g.node_label[j];
    if (u > v) std::swap(u, v);
    os << u << ' ' << v;
    for (const auto& [key, cnt] : per_edge[e].pairs)
      os << ' ' << table.id.at(key.value) << ':' << cnt;
    os << '\n';
  }
}

inline void write_lookup_file(std::ostream& os, const MotifIdTable& table) {
  for (std::size_t a = 0; a < table.keys.size(); ++a) {
    const MotifDesc d = decode(table.keys[a]);
    os << (a + 1) << ' ' << orbit_name(d.orbit) << ' ' << d.num_nodes << ' '
       << d.num_edges << ' ' << format_type_multiset(d.type_span()) << '\n';
  }
}

// Graphlet-level variants of the two writers (--emit graphlet).

struct GraphletIdTable {
  std::vector<GraphletKey> keys;
  std::unordered_map<std::uint64_t, std::uint32_t> id;

  explicit GraphletIdTable(const std::vector<GraphletKey>& sorted_keys)
      : keys(sorted_keys) {
    id.reserve(keys.size());
    for (std::size_t a = 0; a < keys.size(); ++a)
      id.emplace(keys[a].value, static_cast<std::uint32_t>(a + 1));
  }
};

inline void write_counts_file_graphlets(
    std::ostream& os, const HeteroGraph& g,
    const std::vector<EdgeLocalCounts>& per_edge,
    const GraphletIdTable& table) {
  for (edge_id e : io_detail::edge_output_order(g)) {
    const auto [i, j] = g.edge_list[e];
    std::int64_t u = g.node_label[i], v = g.node_label[j];
    if (u > v) std::swap(u, v);
    os << u << ' ' << v;
    for (const auto& [key, cnt] : orbits_to_graphlets(per_edge[e]))
      os << ' ' << table.id.at(key.value) << ':' << cnt;
    os << '\n';
  }
}

inline void write_lookup_file_graphlets(std::ostream& os,
                                        const GraphletIdTable& table) {
  for (std::size_t a = 0; a < table.keys.size(); ++a) {
    const GraphletDesc d = decode_graphlet(table.keys[a]);
    os << (a + 1) << ' ' << graphlet_name(d.graphlet) << ' ' << d.num_nodes
       << ' ' << d.num_edges << ' ' << format_type_multiset(d.type_span())
       << '\n';
  }
}

inline std::vector<GraphletKey> graphlet_key_union(
    const std::vector<EdgeLocalCounts>& per_edge) {
  std::vector<GraphletKey> keys;
  {
    std::unordered_map<std::uint64_t, bool> seen;
    for (const auto& e : per_edge)
      for (const auto& [key, _] : e.pairs)
        seen.emplace(to_graphlet_key(key).value, true);
    keys.reserve(seen.size());
    for (const auto& [v, _] : seen) keys.push_back(GraphletKey{v});
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// ---------------------------------------------------------------------------
// Parsers (round-trip checks and downstream tooling).
// ---------------------------------------------------------------------------

struct CountsLine {
  std::int64_t u = 0, v = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;  // (id, count)
};

inline std::vector<CountsLine> parse_counts_file(std::istream& is) {
  std::vector<CountsLine> lines;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    CountsLine cl;
    if (!(ss >> cl.u >> cl.v))
      throw parse_error("counts file line " + std::to_string(lineno) +
                        ": expected \"u v\"");
    std::string tok;
    while (ss >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw parse_error("counts file line " + std::to_string(lineno) +
                          ": expected id:count, got '" + tok + "'");
      cl.entries.emplace_back(
          static_cast<std::uint32_t>(std::stoul(tok.substr(0, colon))),
          static_cast<std::uint64_t>(std::stoull(tok.substr(colon + 1))));
    }
    lines.push_back(std::move(cl));
  }
  return lines;
}

struct LookupLine {
  std::uint32_t id = 0;
  std::string name;
  int num_nodes = 0;
  int num_edges = 0;
  std::vector<type_id> types;
};

inline std::vector<LookupLine> parse_lookup_file(std::istream& is) {
  std::vector<LookupLine> lines;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    LookupLine ll;
    std::string multiset;
    if (!(ss >> ll.id >> ll.name >> ll.num_nodes >> ll.num_edges >> multiset))
      throw parse_error("lookup file line " + std::to_string(lineno) +
                        ": malformed");
    if (multiset.size() < 2 || multiset.front() != '{' ||
        multiset.back() != '}')
      throw parse_error("lookup file line " + std::to_string(lineno) +
                        ": malformed type multiset");
    std::istringstream ms(multiset.substr(1, multiset.size() - 2));
    std::string part;
    while (std::getline(ms, part, ','))
      ll.types.push_back(static_cast<type_id>(std::stoul(part)));
    lines.push_back(std::move(ll));
  }
  return lines;
}

inline Orbit orbit_from_name(const std::string& name) {
  for (int g = 0; g < kNumOrbits; ++g)
    if (orbit_name(static_cast<Orbit>(g)) == name)
      return static_cast<Orbit>(g);
  throw parse_error("unknown orbit name: " + name);
}

inline Graphlet graphlet_from_name(const std::string& name) {
  for (int h = 0; h < kNumGraphlets; ++h)
    if (graphlet_name(static_cast<Graphlet>(h)) == name)
      return static_cast<Graphlet>(h);
  throw parse_error("unknown graphlet name: " + name);
}

/// Rebuilds per-edge sparse orbit maps from parsed counts + lookup files.
/// Lines come back keyed by the original (u,v) labels.
struct ParsedCounts {
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>,
                        std::vector<std::pair<MotifKey, std::uint64_t>>>>
      edges;
};

inline ParsedCounts reconstruct_counts(const std::vector<CountsLine>& counts,
                                       const std::vector<LookupLine>& lookup) {
  std::unordered_map<std::uint32_t, MotifKey> key_of;
  key_of.reserve(lookup.size());
  for (const auto& ll : lookup)
    key_of.emplace(ll.id, encode(orbit_from_name(ll.name), ll.types));
  ParsedCounts out;
  out.edges.reserve(counts.size());
  for (const auto& cl : counts) {
    std::vector<std::pair<MotifKey, std::uint64_t>> pairs;
    pairs.reserve(cl.entries.size());
    for (const auto& [id, cnt] : cl.entries) {
      const auto it = key_of.find(id);
      if (it == key_of.end())
        throw parse_error("counts file references unknown motif id " +
                          std::to_string(id));
      pairs.emplace_back(it->second, cnt);
    }
    std::sort(pairs.begin(), pairs.end());
    out.edges.push_back({{cl.u, cl.v}, std::move(pairs)});
  }
  return out;
}

}  // namespace tglet

#endif  // TGLET_IO_HPP
