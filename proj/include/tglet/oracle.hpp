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

#ifndef TGLET_ORACLE_HPP
#define TGLET_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tglet/aggregate.hpp"
#include "tglet/common.hpp"
#include "tglet/engine.hpp"
#include "tglet/graph.hpp"
#include "tglet/motif.hpp"

// Brute-force reference counter for small graphs. Everything here enumerates
// node subsets directly and classifies induced subgraphs from their adjacency
// bits, sharing nothing with the engine except the key codec, so it can serve
// as ground truth for it.

namespace tglet {

inline constexpr std::uint64_t kDefaultOracleCap = 60;

namespace oracle_detail {

// Dense adjacency matrix; fine under the node cap.
struct AdjMatrix {
  std::uint64_t n;
  std::vector<std::uint8_t> bits;

  explicit AdjMatrix(const HeteroGraph& g) : n(g.num_nodes), bits(n * n, 0) {
    for (node_id v = 0; v < n; ++v)
      for (node_id w : g.neighbors_of(v)) bits[v * n + w] = 1;
  }

  bool operator()(node_id a, node_id b) const { return bits[a * n + b] != 0; }
};

// Classifies the induced subgraph on {i,j,k,r} (edge (i,j) present) to the
// orbit of edge (i,j), or returns false when the subgraph is disconnected.
// Works purely from the six adjacency bits via degree patterns:
//   6 edges: 4-clique
//   5 edges: chord iff both endpoints have degree 3, else cycle edge
//   4 edges with a degree-1 node: tailed triangle, split by endpoint degrees
//   4 edges otherwise: 4-cycle
//   3 edges with a degree-3 node: 4-star (the center is i or j)
//   3 edges otherwise: 4-path, end edge vs. center edge
inline bool classify_quad(bool ik, bool ir, bool jk, bool jr, bool kr,
                          Orbit& out) {
  const int di = 1 + ik + ir;
  const int dj = 1 + jk + jr;
  const int dk = ik + jk + kr;
  const int dr = ir + jr + kr;
  if (dk == 0 || dr == 0) return false;
  if (dk == 1 && dr == 1 && kr) return false;  // {k,r} is its own component
  const int m = 1 + ik + ir + jk + jr + kr;
  const int lo = std::min(di, dj), hi = std::max(di, dj);
  switch (m) {
    case 6:
      out = Orbit::clique4;
      return true;
    case 5:
      out = (di == 3 && dj == 3) ? Orbit::chordal_center : Orbit::chordal_edge;
      return true;
    case 4:
      if (dk == 1 || dr == 1 || di == 1 || dj == 1) {  // tailed triangle
        if (lo == 1)
          out = Orbit::tailed_tri_tail;
        else if (hi == 3)
          out = Orbit::tailed_tri_edge;
        else
          out = Orbit::tailed_tri_center;
      } else {
        out = Orbit::cycle4;
      }
      return true;
    case 3:
      if (hi == 3)
        out = Orbit::star4;
      else if (lo == 1)
        out = Orbit::path4_edge;
      else
        out = Orbit::path4_center;
      return true;
    default:
      return false;  // m <= 2 cannot connect 4 nodes
  }
}

// Graphlet class of a connected induced 4-node subgraph from its 6 bits.
inline Graphlet classify_quad_graphlet(int m, bool any_deg1, int max_deg) {
  switch (m) {
    case 6:
      return Graphlet::clique4;
    case 5:
      return Graphlet::chordal_cycle;
    case 4:
      return any_deg1 ? Graphlet::tailed_tri : Graphlet::cycle4;
    default:  // m == 3
      return max_deg == 3 ? Graphlet::star4 : Graphlet::path4;
  }
}

inline void check_cap(const HeteroGraph& g, std::uint64_t cap) {
  if (g.num_nodes > cap)
    throw std::invalid_argument(
        "oracle refuses graphs with more than " + std::to_string(cap) +
        " nodes (got " + std::to_string(g.num_nodes) + ")");
}

}  // namespace oracle_detail

/**
 * Exhaustive typed orbit counts for one edge: every connected induced
 * {2,3,4}-node subgraph containing both endpoints, classified and keyed by
 * (orbit, type multiset). Also asserts the neighborhood partition
 * N = |I| + |S_i| + |S_j| + |T_ij| + 2 around the edge.
 */
inline EdgeLocalCounts oracle_edge_counts(
    const HeteroGraph& g, edge_id e,
    std::uint64_t cap = kDefaultOracleCap) {
  oracle_detail::check_cap(g, cap);
  const oracle_detail::AdjMatrix adj(g);
  const auto [i, j] = g.edge_list[e];
  const type_id ti = g.node_type[i], tj = g.node_type[j];
  const auto n = static_cast<node_id>(g.num_nodes);

  std::uint64_t t_sz = 0, si_sz = 0, sj_sz = 0, i_sz = 0;
  for (node_id k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const bool a = adj(i, k), b = adj(j, k);
    t_sz += a && b;
    si_sz += a && !b;
    sj_sz += !a && b;
    i_sz += !a && !b;
  }
  if (g.num_nodes != i_sz + si_sz + sj_sz + t_sz + 2)
    throw internal_consistency_error("neighborhood partition does not cover V");

  std::map<MotifKey, std::uint64_t> counts;
  counts[encode(Orbit::edge, ti, tj)] = 1;

  for (node_id k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const bool ik = adj(i, k), jk = adj(j, k);
    if (!ik && !jk) continue;
    const Orbit o = (ik && jk) ? Orbit::triangle : Orbit::path3;
    counts[encode(o, ti, tj, g.node_type[k])] += 1;
  }

  for (node_id k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    for (node_id r = k + 1; r < n; ++r) {
      if (r == i || r == j) continue;
      Orbit o;
      if (oracle_detail::classify_quad(adj(i, k), adj(i, r), adj(j, k),
                                       adj(j, r), adj(k, r), o))
        counts[encode(o, ti, tj, g.node_type[k], g.node_type[r])] += 1;
    }
  }

  EdgeLocalCounts out;
  out.edge = e;
  out.pairs.assign(counts.begin(), counts.end());
  return out;
}

inline std::vector<EdgeLocalCounts> oracle_all_edges(
    const HeteroGraph& g, std::uint64_t cap = kDefaultOracleCap) {
  oracle_detail::check_cap(g, cap);
  std::vector<EdgeLocalCounts> out;
  out.reserve(g.num_edges);
  for (edge_id e = 0; e < g.num_edges; ++e)
    out.push_back(oracle_edge_counts(g, e, cap));
  return out;
}

/**
 * Exhaustive global typed graphlet counts: every connected induced subgraph
 * of 2..4 nodes counted exactly once, keyed by (graphlet class, type
 * multiset).
 */
inline GlobalCounts oracle_global_counts(
    const HeteroGraph& g, std::uint64_t cap = kDefaultOracleCap) {
  oracle_detail::check_cap(g, cap);
  const oracle_detail::AdjMatrix adj(g);
  const auto n = static_cast<node_id>(g.num_nodes);
  const auto& ty = g.node_type;

  std::map<GraphletKey, std::uint64_t> counts;
  const auto bump = [&](Graphlet h, std::initializer_list<type_id> types) {
    std::vector<type_id> t{types};
    counts[encode_graphlet(h, t)] += 1;
  };

  for (node_id a = 0; a < n; ++a)
    for (node_id b = a + 1; b < n; ++b)
      if (adj(a, b)) bump(Graphlet::edge, {ty[a], ty[b]});

  for (node_id a = 0; a < n; ++a)
    for (node_id b = a + 1; b < n; ++b)
      for (node_id c = b + 1; c < n; ++c) {
        const int m = adj(a, b) + adj(a, c) + adj(b, c);
        if (m == 3)
          bump(Graphlet::triangle, {ty[a], ty[b], ty[c]});
        else if (m == 2)
          bump(Graphlet::path3, {ty[a], ty[b], ty[c]});
      }

  for (node_id a = 0; a < n; ++a)
    for (node_id b = a + 1; b < n; ++b)
      for (node_id c = b + 1; c < n; ++c)
        for (node_id d = c + 1; d < n; ++d) {
          const int deg_a = adj(a, b) + adj(a, c) + adj(a, d);
          const int deg_b = adj(a, b) + adj(b, c) + adj(b, d);
          const int deg_c = adj(a, c) + adj(b, c) + adj(c, d);
          const int deg_d = adj(a, d) + adj(b, d) + adj(c, d);
          const int m = (deg_a + deg_b + deg_c + deg_d) / 2;
          if (m < 3) continue;
          // connectivity: grow the set reachable from `a`
          bool reach_b = adj(a, b), reach_c = adj(a, c), reach_d = adj(a, d);
          for (int pass = 0; pass < 2; ++pass) {
            reach_c = reach_c || (reach_b && adj(b, c)) || (reach_d && adj(c, d));
            reach_d = reach_d || (reach_b && adj(b, d)) || (reach_c && adj(c, d));
            reach_b = reach_b || (reach_c && adj(b, c)) || (reach_d && adj(b, d));
          }
          if (!(reach_b && reach_c && reach_d)) continue;
          const bool any_deg1 =
              deg_a == 1 || deg_b == 1 || deg_c == 1 || deg_d == 1;
          const int max_deg =
              std::max({deg_a, deg_b, deg_c, deg_d});
          bump(oracle_detail::classify_quad_graphlet(m, any_deg1, max_deg),
               {ty[a], ty[b], ty[c], ty[d]});
        }

  GlobalCounts gc;
  gc.num_nodes = g.num_nodes;
  gc.num_edges = g.num_edges;
  gc.num_node_types = g.num_node_types;
  gc.pairs.assign(counts.begin(), counts.end());
  return gc;
}

}  // namespace tglet

#endif  // TGLET_ORACLE_HPP
