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

#ifndef TGLET_ENGINE_HPP
#define TGLET_ENGINE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tglet/common.hpp"
#include "tglet/graph.hpp"
#include "tglet/motif.hpp"

namespace tglet {

/// Sparse nonzero typed-orbit counts for one edge, sorted by canonical key.
struct EdgeLocalCounts {
  edge_id edge = 0;
  std::vector<std::pair<MotifKey, std::uint64_t>> pairs;

  std::uint64_t count(MotifKey key) const {
    const auto it = std::lower_bound(
        pairs.begin(), pairs.end(), key,
        [](const auto& p, MotifKey k) { return p.first < k; });
    return (it != pairs.end() && it->first == key) ? it->second : 0;
  }
};

namespace detail {

// Open-addressing (key -> count) accumulator reused across edges; clearing
// replays the stored entries instead of touching the whole table.
class KeyCountMap {
 public:
  KeyCountMap() { rehash(1024); }

  void add(MotifKey key, std::uint64_t delta) {
    if ((entries_.size() + 1) * 10 > cap_ * 7) rehash(cap_ * 2);
    std::size_t slot = probe(key.value);
    if (keys_[slot] == 0) {
      keys_[slot] = key.value;
      vals_[slot] = delta;
      entries_.push_back(slot);
    } else {
      vals_[slot] = checked_add(vals_[slot], delta);
    }
  }

  std::uint64_t get(MotifKey key) const {
    const std::size_t slot = probe(key.value);
    return keys_[slot] == 0 ? 0 : vals_[slot];
  }

  // entries in insertion order; values live in the table
  std::vector<std::pair<MotifKey, std::uint64_t>> sorted_pairs() const {
    std::vector<std::pair<MotifKey, std::uint64_t>> out;
    out.reserve(entries_.size());
    for (std::size_t slot : entries_)
      out.emplace_back(MotifKey{keys_[slot]}, vals_[slot]);
    std::sort(out.begin(), out.end());
    return out;
  }

  void clear() {
    for (std::size_t slot : entries_) keys_[slot] = 0;
    entries_.clear();
  }

 private:
  std::size_t probe(std::uint64_t key) const {
    // fibonacci hash; keys are never 0
    std::size_t slot = (key * 0x9e3779b97f4a7c15ull) >> shift_;
    while (keys_[slot] != 0 && keys_[slot] != key)
      slot = (slot + 1) & (cap_ - 1);
    return slot;
  }

  void rehash(std::size_t cap) {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint64_t> old_vals = std::move(vals_);
    cap_ = cap;
    shift_ = 64 - std::countr_zero(cap_);
    keys_.assign(cap_, 0);
    vals_.assign(cap_, 0);
    std::vector<std::size_t> old_entries = std::move(entries_);
    entries_.clear();
    for (std::size_t slot : old_entries) {
      const std::size_t s = probe(old_keys[slot]);
      keys_[s] = old_keys[slot];
      vals_[s] = old_vals[slot];
      entries_.push_back(s);
    }
  }

  std::size_t cap_ = 0;
  int shift_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> vals_;
  std::vector<std::size_t> entries_;
};

}  // namespace detail

/**
 * Reusable per-worker workspace for one edge at a time.
 *
 * After the 3-node phase for edge (i,j):
 *   psi[k] == kMarkTri  <=>  k in T_ij (triangle nodes)
 *   psi[k] == kMarkSi   <=>  k in S_i  (wedge nodes centered at i)
 *   psi[k] == kMarkSj   <=>  k in S_j  (wedge nodes centered at j)
 * and i, j themselves are unmarked. T_ij, S_i, S_j exclude the endpoints.
 * reset() restores all-zero marks by replaying the three node lists.
 */
struct ScratchState {
  static constexpr std::uint8_t kUnmarked = 0;
  static constexpr std::uint8_t kMarkSi = 1;
  static constexpr std::uint8_t kMarkSj = 2;
  static constexpr std::uint8_t kMarkTri = 3;

  explicit ScratchState(const HeteroGraph& g)
      : psi(g.num_nodes, kUnmarked),
        tri_cnt(g.num_node_types + 1, 0),
        si_cnt(g.num_node_types + 1, 0),
        sj_cnt(g.num_node_types + 1, 0),
        type_active(g.num_node_types + 1, false) {
    const std::uint64_t d = max_degree(g);
    tri_nodes.reserve(d);
    si_nodes.reserve(d);
    sj_nodes.reserve(d);
    active_types.reserve(g.num_node_types);
  }

  std::vector<std::uint8_t> psi;       // mark table, length N
  std::vector<node_id> tri_nodes;      // T_ij
  std::vector<node_id> si_nodes;       // S_i
  std::vector<node_id> sj_nodes;       // S_j
  std::vector<std::uint64_t> tri_cnt;  // |T_ij^t|, length L+1
  std::vector<std::uint64_t> si_cnt;   // |S_i^t|
  std::vector<std::uint64_t> sj_cnt;   // |S_j^t|
  std::vector<type_id> active_types;   // types with any nonzero cardinality
  std::vector<bool> type_active;
  detail::KeyCountMap acc;             // per-edge sparse counts

  void note_type(type_id t) {
    if (!type_active[t]) {
      type_active[t] = true;
      active_types.push_back(t);
    }
  }

  void reset() {
    for (node_id v : tri_nodes) psi[v] = kUnmarked;
    for (node_id v : si_nodes) psi[v] = kUnmarked;
    for (node_id v : sj_nodes) psi[v] = kUnmarked;
    tri_nodes.clear();
    si_nodes.clear();
    sj_nodes.clear();
    for (type_id t : active_types) {
      tri_cnt[t] = 0;
      si_cnt[t] = 0;
      sj_cnt[t] = 0;
      type_active[t] = false;
    }
    active_types.clear();
    acc.clear();
  }
};

/**
 * 3-node phase for edge (i,j): partitions the joint neighborhood into
 * T_ij = Γ_i ∩ Γ_j, S_j = Γ_j \ (T_ij ∪ {i}), S_i = Γ_i \ (T_ij ∪ {j}),
 * marking nodes in psi, and emits the edge, triangle and wedge counts.
 * The scratch must be freshly reset; (i,j) should be oriented deg(i)<=deg(j).
 */
inline void classify_neighbors(const HeteroGraph& g, node_id i, node_id j,
                               ScratchState& s) {
  const type_id ti = g.node_type[i], tj = g.node_type[j];

  for (node_id k : g.neighbors_of(i))
    if (k != j) s.psi[k] = ScratchState::kMarkSi;

  for (node_id k : g.neighbors_of(j)) {
    if (k == i) continue;
    const type_id tk = g.node_type[k];
    if (s.psi[k] == ScratchState::kMarkSi) {
      s.psi[k] = ScratchState::kMarkTri;
      s.tri_nodes.push_back(k);
      ++s.tri_cnt[tk];
      s.note_type(tk);
      s.acc.add(encode(Orbit::triangle, ti, tj, tk), 1);
    } else {
      s.psi[k] = ScratchState::kMarkSj;
      s.sj_nodes.push_back(k);
      ++s.sj_cnt[tk];
      s.note_type(tk);
      s.acc.add(encode(Orbit::path3, ti, tj, tk), 1);
    }
  }

  for (node_id k : g.neighbors_of(i)) {
    if (k == j) continue;
    if (s.psi[k] == ScratchState::kMarkSi) {
      const type_id tk = g.node_type[k];
      s.si_nodes.push_back(k);
      ++s.si_cnt[tk];
      s.note_type(tk);
      s.acc.add(encode(Orbit::path3, ti, tj, tk), 1);
    }
  }

  s.acc.add(encode(Orbit::edge, ti, tj), 1);
}

/**
 * Path-based 4-node orbits reached by scanning the neighborhoods of S_i and
 * S_j: 4-path edge (unmarked w_r), tailed-triangle tail edge (w_r in the same
 * wedge set, counted once via w_r < w_k) and 4-cycle (w_k in S_j, w_r in S_i).
 */
inline void count_path_based(const HeteroGraph& g, node_id i, node_id j,
                             ScratchState& s) {
  const type_id ti = g.node_type[i], tj = g.node_type[j];

  for (node_id wk : s.si_nodes) {
    const type_id tk = g.node_type[wk];
    for (node_id wr : g.neighbors_of(wk)) {
      if (wr == i || wr == j) continue;
      const std::uint8_t m = s.psi[wr];
      if (m == ScratchState::kUnmarked) {
        s.acc.add(encode(Orbit::path4_edge, ti, tj, tk, g.node_type[wr]), 1);
      } else if (m == ScratchState::kMarkSi && wr < wk) {
        s.acc.add(encode(Orbit::tailed_tri_tail, ti, tj, tk, g.node_type[wr]),
                  1);
      }
    }
  }

  for (node_id wk : s.sj_nodes) {
    const type_id tk = g.node_type[wk];
    for (node_id wr : g.neighbors_of(wk)) {
      if (wr == i || wr == j) continue;
      const std::uint8_t m = s.psi[wr];
      if (m == ScratchState::kUnmarked) {
        s.acc.add(encode(Orbit::path4_edge, ti, tj, tk, g.node_type[wr]), 1);
      } else if (m == ScratchState::kMarkSj && wr < wk) {
        s.acc.add(encode(Orbit::tailed_tri_tail, ti, tj, tk, g.node_type[wr]),
                  1);
      } else if (m == ScratchState::kMarkSi) {
        s.acc.add(encode(Orbit::cycle4, ti, tj, tk, g.node_type[wr]), 1);
      }
    }
  }
}

/**
 * Triangle-based 4-node orbits reached by scanning the neighborhoods of
 * T_ij: 4-clique (w_r in T_ij, once via w_r < w_k), chordal-cycle edge
 * (w_r in S_i ∪ S_j) and tailed-triangle center (w_r unmarked).
 */
inline void count_triangle_based(const HeteroGraph& g, node_id i, node_id j,
                                 ScratchState& s) {
  const type_id ti = g.node_type[i], tj = g.node_type[j];

  for (node_id wk : s.tri_nodes) {
    const type_id tk = g.node_type[wk];
    for (node_id wr : g.neighbors_of(wk)) {
      if (wr == i || wr == j) continue;
      const std::uint8_t m = s.psi[wr];
      if (m == ScratchState::kMarkTri) {
        if (wr < wk)
          s.acc.add(encode(Orbit::clique4, ti, tj, tk, g.node_type[wr]), 1);
      } else if (m == ScratchState::kUnmarked) {
        s.acc.add(encode(Orbit::tailed_tri_center, ti, tj, tk,
                         g.node_type[wr]),
                  1);
      } else {
        s.acc.add(encode(Orbit::chordal_edge, ti, tj, tk, g.node_type[wr]), 1);
      }
    }
  }
}

/**
 * Derives the orbits that never require enumeration — 4-path center, 4-star,
 * tailed-triangle tri-edge and chordal-cycle center — from the typed
 * cardinalities of T_ij, S_i, S_j and the enumerated 4-cycle / tail-edge /
 * chordal-edge / 4-clique counts. One evaluation per unordered type pair
 * drawn from the types actually present around the edge.
 *
 * A negative intermediate means the enumerated counts and the cardinalities
 * disagree, which is an engine bug, never an input condition.
 */
inline void derive_constant_time(const HeteroGraph& g, node_id i, node_id j,
                                 ScratchState& s) {
  const type_id ti = g.node_type[i], tj = g.node_type[j];
  std::sort(s.active_types.begin(), s.active_types.end());

  const auto subtract = [](std::uint64_t lhs, std::uint64_t rhs,
                           const char* what) {
    if (rhs > lhs)
      throw internal_consistency_error(
          std::string("derived count negative for ") + what);
    return lhs - rhs;
  };

  for (std::size_t a = 0; a < s.active_types.size(); ++a) {
    const type_id t = s.active_types[a];
    for (std::size_t b = a; b < s.active_types.size(); ++b) {
      const type_id u = s.active_types[b];
      std::uint64_t path4c, star4, tri_edge, chordal_c;
      if (t == u) {
        path4c = s.si_cnt[t] * s.sj_cnt[t];
        star4 = choose2(s.si_cnt[t]) + choose2(s.sj_cnt[t]);
        tri_edge = s.tri_cnt[t] * (s.si_cnt[t] + s.sj_cnt[t]);
        chordal_c = choose2(s.tri_cnt[t]);
      } else {
        path4c = s.si_cnt[t] * s.sj_cnt[u] + s.si_cnt[u] * s.sj_cnt[t];
        star4 = s.si_cnt[t] * s.si_cnt[u] + s.sj_cnt[t] * s.sj_cnt[u];
        tri_edge = s.tri_cnt[t] * (s.si_cnt[u] + s.sj_cnt[u]) +
                   s.tri_cnt[u] * (s.si_cnt[t] + s.sj_cnt[t]);
        chordal_c = s.tri_cnt[t] * s.tri_cnt[u];
      }

      path4c = subtract(path4c, s.acc.get(encode(Orbit::cycle4, ti, tj, t, u)),
                        "4-path-center");
      star4 = subtract(star4,
                       s.acc.get(encode(Orbit::tailed_tri_tail, ti, tj, t, u)),
                       "4-star");
      tri_edge = subtract(tri_edge,
                          s.acc.get(encode(Orbit::chordal_edge, ti, tj, t, u)),
                          "tailed-tri-tri-edge");
      chordal_c = subtract(chordal_c,
                           s.acc.get(encode(Orbit::clique4, ti, tj, t, u)),
                           "chordal-cycle-center");

      if (path4c) s.acc.add(encode(Orbit::path4_center, ti, tj, t, u), path4c);
      if (star4) s.acc.add(encode(Orbit::star4, ti, tj, t, u), star4);
      if (tri_edge)
        s.acc.add(encode(Orbit::tailed_tri_edge, ti, tj, t, u), tri_edge);
      if (chordal_c)
        s.acc.add(encode(Orbit::chordal_center, ti, tj, t, u), chordal_c);
    }
  }
}

struct CountOptions {
  int workers = 1;
  int max_k = 4;  // 3 limits counting to {2,3}-node orbits
};

/// All typed orbit counts for one edge; the scratch is reset on return.
inline EdgeLocalCounts count_edge(const HeteroGraph& g, edge_id e,
                                  ScratchState& s, int max_k = 4) {
  const auto [i, j] = g.edge_list[e];
  classify_neighbors(g, i, j, s);
  if (max_k >= 4) {
    count_path_based(g, i, j, s);
    count_triangle_based(g, i, j, s);
    derive_constant_time(g, i, j, s);
  }
  EdgeLocalCounts out;
  out.edge = e;
  out.pairs = s.acc.sorted_pairs();
  s.reset();
  return out;
}

/// Per-edge counts for the whole graph plus the set of motifs that occur.
struct LocalCounts {
  std::vector<EdgeLocalCounts> per_edge;  // indexed by edge id
  std::vector<MotifKey> motifs;           // sorted union over all edges
};

/**
 * Counts every edge of the graph. Edges are handed to workers in fixed-size
 * chunks; each worker owns one ScratchState and writes results into disjoint
 * slots indexed by edge id, so the result is independent of the worker count
 * and of scheduling. The per-worker motif sets are merged after the join.
 */
inline LocalCounts count_all(const HeteroGraph& g,
                             const CountOptions& opts = {}) {
  const int workers = std::max(1, opts.workers);
  LocalCounts result;
  result.per_edge.resize(g.num_edges);

  std::vector<std::unordered_set<std::uint64_t>> found(workers);

  if (workers == 1) {
    ScratchState scratch(g);
    for (edge_id e = 0; e < g.num_edges; ++e) {
      result.per_edge[e] = count_edge(g, e, scratch, opts.max_k);
      for (const auto& [key, _] : result.per_edge[e].pairs)
        found[0].insert(key.value);
    }
  } else {
    constexpr std::uint64_t kChunk = 256;
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        ScratchState scratch(g);
        for (;;) {
          const std::uint64_t begin = next.fetch_add(kChunk);
          if (begin >= g.num_edges) break;
          const std::uint64_t end = std::min(begin + kChunk, g.num_edges);
          for (std::uint64_t e = begin; e < end; ++e) {
            result.per_edge[e] =
                count_edge(g, static_cast<edge_id>(e), scratch, opts.max_k);
            for (const auto& [key, _] : result.per_edge[e].pairs)
              found[w].insert(key.value);
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::unordered_set<std::uint64_t> merged;
  for (const auto& f : found) merged.insert(f.begin(), f.end());
  result.motifs.reserve(merged.size());
  for (std::uint64_t v : merged) result.motifs.push_back(MotifKey{v});
  std::sort(result.motifs.begin(), result.motifs.end());
  return result;
}

/// One engine/oracle disagreement located by edge and key.
struct CountDiff {
  edge_id edge = 0;
  MotifKey key;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};

/// Exact per-edge comparison of two complete result sets.
inline std::vector<CountDiff> diff_counts(
    const std::vector<EdgeLocalCounts>& lhs,
    const std::vector<EdgeLocalCounts>& rhs) {
  std::vector<CountDiff> diffs;
  const std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t e = 0; e < n; ++e) {
    static const EdgeLocalCounts kEmpty;
    const auto& a = e < lhs.size() ? lhs[e] : kEmpty;
    const auto& b = e < rhs.size() ? rhs[e] : kEmpty;
    std::size_t x = 0, y = 0;
    while (x < a.pairs.size() || y < b.pairs.size()) {
      if (y >= b.pairs.size() ||
          (x < a.pairs.size() && a.pairs[x].first < b.pairs[y].first)) {
        diffs.push_back({static_cast<edge_id>(e), a.pairs[x].first,
                         a.pairs[x].second, 0});
        ++x;
      } else if (x >= a.pairs.size() || b.pairs[y].first < a.pairs[x].first) {
        diffs.push_back({static_cast<edge_id>(e), b.pairs[y].first, 0,
                         b.pairs[y].second});
        ++y;
      } else {
        if (a.pairs[x].second != b.pairs[y].second)
          diffs.push_back({static_cast<edge_id>(e), a.pairs[x].first,
                           a.pairs[x].second, b.pairs[y].second});
        ++x;
        ++y;
      }
    }
  }
  return diffs;
}

}  // namespace tglet

#endif  // TGLET_ENGINE_HPP
