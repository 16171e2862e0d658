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

#ifndef TGLET_SYNTH_HPP
#define TGLET_SYNTH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "tglet/common.hpp"
#include "tglet/graph.hpp"

namespace tglet {

namespace synth_detail {

// Draws avoid std::*_distribution so that a given seed produces the same
// graph on every standard library.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace synth_detail

/**
 * G(n,p) with geometric gap sampling, O(n + M) expected time.
 * All nodes get type 1. Deterministic for a given seed.
 */
inline HeteroGraph gen_er(std::uint64_t n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_er: n must be at least 2");
  std::vector<std::pair<node_id, node_id>> edges;
  if (p >= 1.0) {
    for (node_id v = 1; v < n; ++v)
      for (node_id w = 0; w < v; ++w) edges.emplace_back(w, v);
  } else if (p > 0.0) {
    std::mt19937_64 rng(seed);
    const double log1mp = std::log1p(-p);
    std::uint64_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
      const double r = synth_detail::uniform01(rng);
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log1mp));
      while (w >= static_cast<std::int64_t>(v) && v < n) {
        w -= static_cast<std::int64_t>(v);
        ++v;
      }
      if (v < n)
        edges.emplace_back(static_cast<node_id>(w), static_cast<node_id>(v));
    }
  }
  return make_graph(n, std::move(edges), std::vector<type_id>(n, 1), 1);
}

/**
 * Chung-Lu model: edge (u,v) appears independently with probability
 * min(1, w_u * w_v / sum(w)). Uses the sorted-weight skipping sampler, so is
 * O(n + M) expected. Weights are per original node index; all nodes type 1.
 */
inline HeteroGraph gen_chung_lu(std::uint64_t n, std::vector<double> weights,
                                std::uint64_t seed) {
  if (weights.size() != n)
    throw std::invalid_argument("gen_chung_lu: need one weight per node");
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  // process nodes in descending weight order; edges keep original ids
  std::vector<node_id> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](node_id a, node_id b) {
    return weights[a] > weights[b];
  });

  std::mt19937_64 rng(seed);
  std::vector<std::pair<node_id, node_id>> edges;
  for (std::uint64_t u = 0; u + 1 < n; ++u) {
    const double wu = weights[order[u]];
    std::uint64_t v = u + 1;
    double p = std::min(1.0, wu * weights[order[v]] / total);
    while (v < n && p > 0.0) {
      if (p < 1.0) {
        const double r = synth_detail::uniform01(rng);
        v += static_cast<std::uint64_t>(
            std::floor(std::log1p(-r) / std::log1p(-p)));
      }
      if (v < n) {
        const double q = std::min(1.0, wu * weights[order[v]] / total);
        if (synth_detail::uniform01(rng) < q / p)
          edges.emplace_back(order[u], order[v]);
        p = q;
        ++v;
      }
    }
  }
  return make_graph(n, std::move(edges), std::vector<type_id>(n, 1), 1);
}

/// Chung-Lu with power-law weights w_i ∝ (i+1)^(-1/(gamma-1)), rescaled to a
/// target average degree.
inline HeteroGraph gen_chung_lu_powerlaw(std::uint64_t n, double gamma,
                                         double avg_degree,
                                         std::uint64_t seed) {
  if (gamma <= 1.0)
    throw std::invalid_argument("power-law exponent must exceed 1");
  if (avg_degree <= 0.0)
    throw std::invalid_argument("average degree must be positive");
  std::vector<double> w(n);
  const double alpha = 1.0 / (gamma - 1.0);
  for (std::uint64_t a = 0; a < n; ++a)
    w[a] = std::pow(static_cast<double>(a + 1), -alpha);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  const double scale = avg_degree * static_cast<double>(n) / total;
  for (double& x : w) x *= scale;
  return gen_chung_lu(n, std::move(w), seed);
}

/**
 * Reassigns node types uniformly at random into L balanced classes: each type
 * receives floor(N/L) nodes, the first N mod L types one extra. The
 * assignment is a seeded random permutation; everything else is copied.
 */
inline HeteroGraph assign_types_uniform(const HeteroGraph& g, type_id L,
                                        std::uint64_t seed) {
  if (L < 1) throw std::invalid_argument("L must be at least 1");
  if (L > g.num_nodes)
    throw std::invalid_argument("more types than nodes: L=" +
                                std::to_string(L) + ", N=" +
                                std::to_string(g.num_nodes));
  std::vector<node_id> perm(g.num_nodes);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t a = g.num_nodes - 1; a > 0; --a)
    std::swap(perm[a], perm[synth_detail::uniform_below(rng, a + 1)]);

  HeteroGraph out = g;
  out.num_node_types = L;
  out.node_type.assign(g.num_nodes, 0);
  const std::uint64_t base = g.num_nodes / L;
  const std::uint64_t extra = g.num_nodes % L;
  std::uint64_t pos = 0;
  for (type_id t = 1; t <= L; ++t) {
    const std::uint64_t size = base + (t <= extra ? 1 : 0);
    for (std::uint64_t a = 0; a < size; ++a) out.node_type[perm[pos++]] = t;
  }
  out.type_name.assign(L + 1, "");
  for (type_id t = 1; t <= L; ++t) out.type_name[t] = std::to_string(t);
  return out;
}

/// Collapses all node types to 1; used for untyped-marginalization checks.
inline HeteroGraph collapse_types(const HeteroGraph& g) {
  HeteroGraph out = g;
  out.num_node_types = 1;
  out.node_type.assign(g.num_nodes, 1);
  out.type_name = {"", "1"};
  return out;
}

}  // namespace tglet

#endif  // TGLET_SYNTH_HPP
