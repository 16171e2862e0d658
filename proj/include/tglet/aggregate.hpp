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

#ifndef TGLET_AGGREGATE_HPP
#define TGLET_AGGREGATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tglet/common.hpp"
#include "tglet/engine.hpp"
#include "tglet/motif.hpp"

namespace tglet {

/// Whole-graph typed graphlet frequencies (graphlet level, orbits merged).
struct GlobalCounts {
  std::vector<std::pair<GraphletKey, std::uint64_t>> pairs;  // sorted by key
  std::uint64_t num_nodes = 0;
  std::uint64_t num_edges = 0;
  type_id num_node_types = 0;

  std::uint64_t count(GraphletKey key) const {
    const auto it = std::lower_bound(
        pairs.begin(), pairs.end(), key,
        [](const auto& p, GraphletKey k) { return p.first < k; });
    return (it != pairs.end() && it->first == key) ? it->second : 0;
  }
};

/// Rolls one edge's orbit counts up to graphlet level:
/// 4-path = edge+center orbits, tailed-triangle = tail+center+tri-edge,
/// chordal-cycle = edge+center, everything else passes through.
inline std::vector<std::pair<GraphletKey, std::uint64_t>> orbits_to_graphlets(
    const EdgeLocalCounts& e) {
  std::vector<std::pair<GraphletKey, std::uint64_t>> out;
  out.reserve(e.pairs.size());
  for (const auto& [key, cnt] : e.pairs)
    out.emplace_back(to_graphlet_key(key), cnt);
  std::sort(out.begin(), out.end());
  std::size_t w = 0;
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (w > 0 && out[w - 1].first == out[r].first)
      out[w - 1].second = checked_add(out[w - 1].second, out[r].second);
    else
      out[w++] = out[r];
  }
  out.resize(w);
  return out;
}

/**
 * Global frequency of every typed graphlet: the per-edge counts of a graphlet
 * H sum to |E(H)| times its global frequency, since each instance is seen
 * once from each of its edges. A sum that does not divide evenly means the
 * per-edge counts are inconsistent.
 */
inline GlobalCounts global_counts(const std::vector<EdgeLocalCounts>& edges,
                                  const HeteroGraph& g) {
  std::unordered_map<GraphletKey, std::uint64_t> total;
  for (const auto& e : edges)
    for (const auto& [key, cnt] : e.pairs) {
      auto& slot = total[to_graphlet_key(key)];
      slot = checked_add(slot, cnt);
    }
  GlobalCounts gc;
  gc.num_nodes = g.num_nodes;
  gc.num_edges = g.num_edges;
  gc.num_node_types = g.num_node_types;
  gc.pairs.reserve(total.size());
  for (const auto& [key, sum] : total) {
    const auto div =
        static_cast<std::uint64_t>(graphlet_edge_count(decode_graphlet(key).graphlet));
    if (sum % div != 0)
      throw internal_consistency_error(
          "edge-summed count " + std::to_string(sum) + " for " +
          describe(key) + " is not divisible by " + std::to_string(div));
    gc.pairs.emplace_back(key, sum / div);
  }
  std::sort(gc.pairs.begin(), gc.pairs.end());
  return gc;
}

/// Relative frequencies of the typed variants of one graphlet class,
/// sorted by descending probability (ties broken by key).
struct MotifDistribution {
  Graphlet graphlet = Graphlet::edge;
  std::vector<std::pair<GraphletKey, double>> probs;
  std::vector<std::pair<GraphletKey, std::uint64_t>> counts;
};

inline MotifDistribution typed_distribution(const GlobalCounts& gc,
                                            Graphlet h) {
  MotifDistribution d;
  d.graphlet = h;
  std::uint64_t total = 0;
  for (const auto& [key, cnt] : gc.pairs) {
    if (static_cast<Graphlet>(key.value >> 48) != h) continue;
    d.counts.emplace_back(key, cnt);
    total = checked_add(total, cnt);
  }
  if (total == 0) return d;  // class absent: empty distribution, not an error
  d.probs.reserve(d.counts.size());
  for (const auto& [key, cnt] : d.counts)
    d.probs.emplace_back(key, static_cast<double>(cnt) /
                                  static_cast<double>(total));
  std::sort(d.probs.begin(), d.probs.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::sort(d.counts.begin(), d.counts.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second > b.second
                                          : a.first < b.first;
            });
  return d;
}

/// Shannon entropy in bits; 0*log(0) := 0. The input must be normalized.
inline double entropy_bits(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0)
      throw std::invalid_argument("negative probability");
    sum += v;
  }
  if (!p.empty() && std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("distribution is not normalized");
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

inline double entropy_bits(const MotifDistribution& d) {
  std::vector<double> p;
  p.reserve(d.probs.size());
  for (const auto& [_, v] : d.probs) p.push_back(v);
  return entropy_bits(p);
}

/// Number of possible typed variants of a single K-node graphlet with L
/// types: the multiset coefficient C(L+K-1, K).
inline std::uint64_t num_possible_typed(int K, int L) {
  if (K < 2 || K > 4) throw std::invalid_argument("K must be 2, 3 or 4");
  if (L < 1) throw std::invalid_argument("L must be positive");
  const auto n = static_cast<std::uint64_t>(L) + K - 1;
  std::uint64_t v = 1;
  for (int a = 1; a <= K; ++a) v = v * (n - K + a) / a;
  return v;
}

/// Observed / possible / forbidden typed variants for one graphlet class.
struct ClassSummary {
  Graphlet graphlet = Graphlet::edge;
  std::uint64_t observed = 0;
  std::uint64_t possible = 0;
  std::uint64_t forbidden = 0;
};

/// Per-class distinct-variant counts over the eight connected {3,4}-node
/// graphlet classes.
inline std::vector<ClassSummary> unique_counts_summary(
    const GlobalCounts& gc) {
  std::vector<ClassSummary> out;
  for (int h = static_cast<int>(Graphlet::path3);
       h < kNumGraphlets; ++h) {
    ClassSummary cs;
    cs.graphlet = static_cast<Graphlet>(h);
    for (const auto& [key, _] : gc.pairs)
      cs.observed += (static_cast<int>(key.value >> 48) == h);
    cs.possible = num_possible_typed(graphlet_nodes(cs.graphlet),
                                     static_cast<int>(gc.num_node_types));
    cs.forbidden = cs.possible - cs.observed;
    out.push_back(cs);
  }
  return out;
}

}  // namespace tglet

#endif  // TGLET_AGGREGATE_HPP
