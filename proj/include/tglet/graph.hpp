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

#ifndef TGLET_GRAPH_HPP
#define TGLET_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tglet/common.hpp"
#include "tglet/motif.hpp"

namespace tglet {

struct LoadStats {
  std::uint64_t duplicate_edges = 0;
  std::uint64_t self_loops = 0;
};

/**
 * Immutable undirected typed graph in compressed adjacency form.
 *
 * Invariants (enforced at construction):
 *  - offsets is non-decreasing with offsets[N] == 2M
 *  - per-node neighbor blocks are strictly ascending
 *  - adjacency is symmetric, no self-loops, no duplicate edges
 *  - node types form the dense range 1..L
 *  - edge_list entries are oriented so deg(i) <= deg(j), ties by smaller id
 *
 * Safe for unrestricted concurrent reads once built.
 */
struct HeteroGraph {
  std::uint64_t num_nodes = 0;  // N
  std::uint64_t num_edges = 0;  // M (undirected)
  std::vector<std::uint64_t> offsets;          // length N+1
  std::vector<node_id> neighbors;              // length 2M
  std::vector<type_id> node_type;              // length N, values 1..L
  type_id num_node_types = 0;                  // L
  std::vector<type_id> edge_type;              // length M, or empty
  type_id num_edge_types = 0;                  // |T_E| (recorded, unused)
  std::vector<std::pair<node_id, node_id>> edge_list;  // length M, oriented

  // remap tables: dense id -> original identifier
  std::vector<std::int64_t> node_label;        // length N
  std::vector<std::string> type_name;          // length L+1, [0] unused
  std::vector<std::string> edge_type_name;     // length |T_E|+1 if present

  LoadStats stats;

  std::uint64_t degree(node_id v) const { return offsets[v + 1] - offsets[v]; }

  std::span<const node_id> neighbors_of(node_id v) const {
    return {neighbors.data() + offsets[v],
            neighbors.data() + offsets[v + 1]};
  }

  bool has_edge(node_id u, node_id v) const {
    const auto block = neighbors_of(u);
    return std::binary_search(block.begin(), block.end(), v);
  }

  bool operator==(const HeteroGraph& o) const {
    return num_nodes == o.num_nodes && num_edges == o.num_edges &&
           offsets == o.offsets && neighbors == o.neighbors &&
           node_type == o.node_type && num_node_types == o.num_node_types &&
           edge_type == o.edge_type && num_edge_types == o.num_edge_types &&
           edge_list == o.edge_list && node_label == o.node_label &&
           type_name == o.type_name && edge_type_name == o.edge_type_name;
  }
};

/// |Γ_v^t|: number of neighbors of v with type t.
inline std::uint64_t typed_degree(const HeteroGraph& g, node_id v, type_id t) {
  if (v >= g.num_nodes)
    throw std::invalid_argument("node id out of range: " + std::to_string(v));
  if (t == 0 || t > g.num_node_types)
    throw std::invalid_argument("type id out of range: " + std::to_string(t));
  std::uint64_t n = 0;
  for (node_id w : g.neighbors_of(v)) n += (g.node_type[w] == t);
  return n;
}

inline std::uint64_t max_degree(const HeteroGraph& g) {
  std::uint64_t d = 0;
  for (node_id v = 0; v < g.num_nodes; ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace detail {

// Builds the compressed form from deduplicated canonical (u<v) pairs.
// Node count, types and labels are already dense.
inline HeteroGraph build_graph(std::uint64_t n,
                               std::vector<std::pair<node_id, node_id>> pairs,
                               std::vector<type_id> types, type_id num_types,
                               std::vector<std::int64_t> labels,
                               std::vector<std::string> type_names,
                               std::vector<type_id> etypes,
                               type_id num_etypes,
                               std::vector<std::string> etype_names,
                               LoadStats stats) {
  if (pairs.empty()) throw parse_error("graph has no edges");
  HeteroGraph g;
  g.num_nodes = n;
  g.num_edges = pairs.size();
  g.node_type = std::move(types);
  g.num_node_types = num_types;
  g.node_label = std::move(labels);
  g.type_name = std::move(type_names);
  g.edge_type = std::move(etypes);
  g.num_edge_types = num_etypes;
  g.edge_type_name = std::move(etype_names);
  g.stats = stats;

  g.offsets.assign(n + 1, 0);
  for (const auto& [u, v] : pairs) {
    ++g.offsets[u + 1];
    ++g.offsets[v + 1];
  }
  for (std::uint64_t v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];

  g.neighbors.resize(2 * g.num_edges);
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [u, v] : pairs) {
    g.neighbors[cursor[u]++] = v;
    g.neighbors[cursor[v]++] = u;
  }
  for (std::uint64_t v = 0; v < n; ++v)
    std::sort(g.neighbors.begin() + g.offsets[v],
              g.neighbors.begin() + g.offsets[v + 1]);

  g.edge_list.reserve(g.num_edges);
  for (const auto& [u, v] : pairs) {
    const std::uint64_t du = g.offsets[u + 1] - g.offsets[u];
    const std::uint64_t dv = g.offsets[v + 1] - g.offsets[v];
    if (du < dv || (du == dv && u < v))
      g.edge_list.emplace_back(u, v);
    else
      g.edge_list.emplace_back(v, u);
  }
  return g;
}

inline bool parse_int(std::string_view tok, std::int64_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && p == last;
}

struct Tokenizer {
  std::string_view line;
  std::size_t pos = 0;
  bool next(std::string_view& tok) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r'))
      ++pos;
    if (pos >= line.size()) return false;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r')
      ++pos;
    tok = line.substr(start, pos - start);
    return true;
  }
};

// Type labels sort numerically when every label parses as an integer,
// lexicographically otherwise. Keeps generator output stable on reload.
inline std::vector<std::string> sorted_labels(
    const std::unordered_map<std::string, type_id>& seen) {
  std::vector<std::string> labels;
  labels.reserve(seen.size());
  for (const auto& [name, _] : seen) labels.push_back(name);
  bool all_int = true;
  std::vector<std::pair<std::int64_t, std::string>> numeric;
  numeric.reserve(labels.size());
  for (const auto& s : labels) {
    std::int64_t v = 0;
    if (!parse_int(s, v)) {
      all_int = false;
      break;
    }
    numeric.emplace_back(v, s);
  }
  if (all_int) {
    std::sort(numeric.begin(), numeric.end());
    for (std::size_t a = 0; a < numeric.size(); ++a)
      labels[a] = std::move(numeric[a].second);
  } else {
    std::sort(labels.begin(), labels.end());
  }
  return labels;
}

}  // namespace detail

/**
 * Loads a graph from whitespace-separated text files.
 *
 * Edge file: "src dst" per line, optional third column = edge type label.
 * Types file: "node_id type_label" per line. '#' starts a comment in both.
 * Self-loops are dropped and duplicate edges merged (both counted in stats).
 * Nodes listed only in the types file are kept as isolated nodes.
 */
inline HeteroGraph load_edge_list(const std::string& edge_path,
                                  const std::string& types_path) {
  std::ifstream tf(types_path);
  if (!tf) throw parse_error("cannot open types file: " + types_path);

  std::unordered_map<std::int64_t, std::string> node_to_label;
  std::unordered_map<std::string, type_id> type_seen;
  {
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(tf, line)) {
      ++lineno;
      std::string_view sv{line};
      if (auto h = sv.find('#'); h != std::string_view::npos)
        sv = sv.substr(0, h);
      detail::Tokenizer tok{sv};
      std::string_view a, b, extra;
      if (!tok.next(a)) continue;  // blank line
      if (!tok.next(b))
        throw parse_error(types_path + ":" + std::to_string(lineno) +
                          ": expected \"node_id type_label\"");
      if (tok.next(extra))
        throw parse_error(types_path + ":" + std::to_string(lineno) +
                          ": trailing token '" + std::string(extra) + "'");
      std::int64_t node = 0;
      if (!detail::parse_int(a, node))
        throw parse_error(types_path + ":" + std::to_string(lineno) +
                          ": non-integer node id '" + std::string(a) + "'");
      std::string label{b};
      auto [it, inserted] = node_to_label.emplace(node, label);
      if (!inserted && it->second != label)
        throw parse_error(types_path + ":" + std::to_string(lineno) +
                          ": conflicting type for node " +
                          std::to_string(node));
      type_seen.emplace(std::move(label), 0);
    }
  }

  std::ifstream ef(edge_path);
  if (!ef) throw parse_error("cannot open edge file: " + edge_path);

  struct RawEdge {
    std::int64_t u, v;
    std::string etype;  // empty when absent
  };
  std::vector<RawEdge> raw;
  LoadStats stats;
  bool any_edge_types = false;
  {
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(ef, line)) {
      ++lineno;
      std::string_view sv{line};
      if (auto h = sv.find('#'); h != std::string_view::npos)
        sv = sv.substr(0, h);
      detail::Tokenizer tok{sv};
      std::string_view a, b, c, extra;
      if (!tok.next(a)) continue;
      if (!tok.next(b))
        throw parse_error(edge_path + ":" + std::to_string(lineno) +
                          ": expected \"src dst\"");
      const bool has_etype = tok.next(c);
      if (has_etype && tok.next(extra))
        throw parse_error(edge_path + ":" + std::to_string(lineno) +
                          ": trailing token '" + std::string(extra) + "'");
      std::int64_t u = 0, v = 0;
      if (!detail::parse_int(a, u))
        throw parse_error(edge_path + ":" + std::to_string(lineno) +
                          ": non-integer token '" + std::string(a) + "'");
      if (!detail::parse_int(b, v))
        throw parse_error(edge_path + ":" + std::to_string(lineno) +
                          ": non-integer token '" + std::string(b) + "'");
      if (u == v) {
        ++stats.self_loops;
        continue;
      }
      any_edge_types |= has_etype;
      raw.push_back({u, v, has_etype ? std::string(c) : std::string()});
    }
  }

  // dense node ids: numeric order over the union of both files
  std::vector<std::int64_t> ids;
  ids.reserve(node_to_label.size());
  for (const auto& [node, _] : node_to_label) ids.push_back(node);
  for (const auto& e : raw) {
    if (!node_to_label.count(e.u))
      throw parse_error("node " + std::to_string(e.u) +
                        " appears in edges but has no type");
    if (!node_to_label.count(e.v))
      throw parse_error("node " + std::to_string(e.v) +
                        " appears in edges but has no type");
  }
  std::sort(ids.begin(), ids.end());
  std::unordered_map<std::int64_t, node_id> dense;
  dense.reserve(ids.size());
  for (std::size_t a = 0; a < ids.size(); ++a)
    dense.emplace(ids[a], static_cast<node_id>(a));

  // dense type ids 1..L
  std::vector<std::string> labels = detail::sorted_labels(type_seen);
  if (labels.size() > kMaxTypeId)
    throw parse_error("too many node types: " + std::to_string(labels.size()) +
                      " (limit " + std::to_string(kMaxTypeId) + ")");
  std::vector<std::string> type_names(labels.size() + 1);
  for (auto& [name, id] : type_seen) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    id = static_cast<type_id>(it - labels.begin()) + 1;
    type_names[id] = name;
  }

  std::vector<type_id> types(ids.size(), 0);
  for (const auto& [node, label] : node_to_label)
    types[dense[node]] = type_seen[label];

  // canonical (u<v) pairs, deduplicated; first occurrence keeps its edge type
  struct CanonEdge {
    node_id u, v;
    std::string etype;
    bool operator<(const CanonEdge& o) const {
      return u != o.u ? u < o.u : v < o.v;
    }
  };
  std::vector<CanonEdge> canon;
  canon.reserve(raw.size());
  for (const auto& e : raw) {
    node_id du = dense[e.u], dv = dense[e.v];
    if (du > dv) std::swap(du, dv);
    canon.push_back({du, dv, e.etype});
  }
  std::stable_sort(canon.begin(), canon.end());
  std::vector<std::pair<node_id, node_id>> pairs;
  std::vector<std::string> pair_etype;
  pairs.reserve(canon.size());
  for (std::size_t a = 0; a < canon.size(); ++a) {
    if (a > 0 && canon[a].u == pairs.back().first &&
        canon[a].v == pairs.back().second) {
      ++stats.duplicate_edges;
      continue;
    }
    pairs.emplace_back(canon[a].u, canon[a].v);
    pair_etype.push_back(canon[a].etype);
  }

  std::vector<type_id> etypes;
  type_id num_etypes = 0;
  std::vector<std::string> etype_names;
  if (any_edge_types) {
    std::unordered_map<std::string, type_id> eseen;
    for (const auto& s : pair_etype) eseen.emplace(s, 0);
    std::vector<std::string> elabels = detail::sorted_labels(eseen);
    etype_names.assign(elabels.size() + 1, "");
    for (auto& [name, id] : eseen) {
      const auto it = std::find(elabels.begin(), elabels.end(), name);
      id = static_cast<type_id>(it - elabels.begin()) + 1;
      etype_names[id] = name;
    }
    num_etypes = static_cast<type_id>(elabels.size());
    etypes.reserve(pairs.size());
    for (const auto& s : pair_etype) etypes.push_back(eseen[s]);
  }

  const std::uint64_t n = ids.size();
  const auto num_types = static_cast<type_id>(labels.size());
  return detail::build_graph(n, std::move(pairs), std::move(types), num_types,
                             std::move(ids), std::move(type_names),
                             std::move(etypes), num_etypes,
                             std::move(etype_names), stats);
}

/// Builds a graph from in-memory parts (used by the generators and tests).
/// Node ids are already dense 0..n-1; types are dense 1..L.
inline HeteroGraph make_graph(std::uint64_t n,
                              std::vector<std::pair<node_id, node_id>> edges,
                              std::vector<type_id> types, type_id num_types) {
  if (types.size() != n) throw std::invalid_argument("types size != n");
  LoadStats stats;
  std::vector<std::pair<node_id, node_id>> pairs;
  pairs.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("node id out of range");
    if (u == v) {
      ++stats.self_loops;
      continue;
    }
    if (u > v) std::swap(u, v);
    pairs.emplace_back(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  const auto last = std::unique(pairs.begin(), pairs.end());
  stats.duplicate_edges = pairs.end() - last;
  pairs.erase(last, pairs.end());

  std::vector<std::int64_t> labels(n);
  for (std::uint64_t v = 0; v < n; ++v) labels[v] = static_cast<std::int64_t>(v);
  std::vector<std::string> type_names(num_types + 1);
  for (type_id t = 1; t <= num_types; ++t) type_names[t] = std::to_string(t);
  return detail::build_graph(n, std::move(pairs), std::move(types), num_types,
                             std::move(labels), std::move(type_names), {}, 0,
                             {}, stats);
}

/// Writes the graph back out in the text formats accepted by load_edge_list.
inline void write_edge_list(const HeteroGraph& g, const std::string& edge_path,
                            const std::string& types_path) {
  std::ofstream ef(edge_path);
  if (!ef) throw parse_error("cannot write edge file: " + edge_path);
  for (std::size_t a = 0; a < g.num_edges; ++a) {
    auto [i, j] = g.edge_list[a];
    std::int64_t u = g.node_label[i], v = g.node_label[j];
    if (u > v) std::swap(u, v);
    ef << u << ' ' << v;
    if (!g.edge_type.empty()) ef << ' ' << g.edge_type_name[g.edge_type[a]];
    ef << '\n';
  }
  std::ofstream tf(types_path);
  if (!tf) throw parse_error("cannot write types file: " + types_path);
  for (node_id v = 0; v < g.num_nodes; ++v)
    tf << g.node_label[v] << ' ' << g.type_name[g.node_type[v]] << '\n';
}

// ---------------------------------------------------------------------------
// Binary cache. Little-endian fixed-width layout:
//   magic "TGLC", u32 version, u64 N, u64 M, u32 L, u32 |T_E|,
//   u64 offsets[N+1], u32 neighbors[2M], u32 node_type[N],
//   u8 has_edge_types, [u32 edge_type[M]],
//   u32 edge_list[2M] (i,j interleaved), i64 node_label[N],
//   strings: u32 count, then (u32 len, bytes) each for type and edge-type
//   names. Not a stable interchange format; a version bump invalidates it.
// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void put_vec(std::ostream& os, const std::vector<T>& v) {
  os.write(reinterpret_cast<const char*>(v.data()),
           static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw parse_error("truncated binary graph cache");
  return v;
}

template <typename T>
std::vector<T> get_vec(std::istream& is, std::size_t n) {
  std::vector<T> v(n);
  is.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(n * sizeof(T)));
  if (!is) throw parse_error("truncated binary graph cache");
  return v;
}

inline void put_strings(std::ostream& os, const std::vector<std::string>& v) {
  put<std::uint32_t>(os, static_cast<std::uint32_t>(v.size()));
  for (const auto& s : v) {
    put<std::uint32_t>(os, static_cast<std::uint32_t>(s.size()));
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
}

inline std::vector<std::string> get_strings(std::istream& is) {
  const auto n = get<std::uint32_t>(is);
  std::vector<std::string> v(n);
  for (auto& s : v) {
    const auto len = get<std::uint32_t>(is);
    s.resize(len);
    is.read(s.data(), len);
    if (!is) throw parse_error("truncated binary graph cache");
  }
  return v;
}

}  // namespace detail

inline constexpr std::uint32_t kGraphCacheVersion = 1;

inline void save_binary(const HeteroGraph& g, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw parse_error("cannot write cache: " + path);
  os.write("TGLC", 4);
  detail::put<std::uint32_t>(os, kGraphCacheVersion);
  detail::put<std::uint64_t>(os, g.num_nodes);
  detail::put<std::uint64_t>(os, g.num_edges);
  detail::put<std::uint32_t>(os, g.num_node_types);
  detail::put<std::uint32_t>(os, g.num_edge_types);
  detail::put_vec(os, g.offsets);
  detail::put_vec(os, g.neighbors);
  detail::put_vec(os, g.node_type);
  detail::put<std::uint8_t>(os, g.edge_type.empty() ? 0 : 1);
  if (!g.edge_type.empty()) detail::put_vec(os, g.edge_type);
  std::vector<node_id> flat;
  flat.reserve(2 * g.num_edges);
  for (const auto& [i, j] : g.edge_list) {
    flat.push_back(i);
    flat.push_back(j);
  }
  detail::put_vec(os, flat);
  detail::put_vec(os, g.node_label);
  detail::put_strings(os, g.type_name);
  detail::put_strings(os, g.edge_type_name);
}

inline HeteroGraph load_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw parse_error("cannot open cache: " + path);
  char magic[4] = {};
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "TGLC", 4) != 0)
    throw parse_error("not a tglet graph cache: " + path);
  if (detail::get<std::uint32_t>(is) != kGraphCacheVersion)
    throw parse_error("unsupported graph cache version: " + path);
  HeteroGraph g;
  g.num_nodes = detail::get<std::uint64_t>(is);
  g.num_edges = detail::get<std::uint64_t>(is);
  g.num_node_types = detail::get<std::uint32_t>(is);
  g.num_edge_types = detail::get<std::uint32_t>(is);
  g.offsets = detail::get_vec<std::uint64_t>(is, g.num_nodes + 1);
  g.neighbors = detail::get_vec<node_id>(is, 2 * g.num_edges);
  g.node_type = detail::get_vec<type_id>(is, g.num_nodes);
  if (detail::get<std::uint8_t>(is))
    g.edge_type = detail::get_vec<type_id>(is, g.num_edges);
  const auto flat = detail::get_vec<node_id>(is, 2 * g.num_edges);
  g.edge_list.reserve(g.num_edges);
  for (std::size_t a = 0; a < flat.size(); a += 2)
    g.edge_list.emplace_back(flat[a], flat[a + 1]);
  g.node_label = detail::get_vec<std::int64_t>(is, g.num_nodes);
  g.type_name = detail::get_strings(is);
  g.edge_type_name = detail::get_strings(is);
  return g;
}

}  // namespace tglet

#endif  // TGLET_GRAPH_HPP
