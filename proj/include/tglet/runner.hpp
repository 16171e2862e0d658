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

#ifndef TGLET_RUNNER_HPP
#define TGLET_RUNNER_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tglet/aggregate.hpp"
#include "tglet/engine.hpp"
#include "tglet/graph.hpp"
#include "tglet/io.hpp"
#include "tglet/motif.hpp"
#include "tglet/oracle.hpp"
#include "tglet/synth.hpp"

namespace tglet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string graph;        // --graph
  std::string types;       // --types
  std::string out;          // --out (path prefix)
  std::string cache;        // --cache (binary graph cache)
  int workers = 1;          // --threads
  int max_k = 4;            // --max-k
  std::string emit = "orbit";  // --emit orbit|graphlet
  std::uint64_t seed = 1;   // --seed
  std::string model = "er";  // --model er|cl
  std::uint64_t n = 0;      // --n
  double p = 0.0;           // --p
  double avg_degree = 0.0;  // --avg-deg (alternative to --p)
  double exponent = 0.0;    // --exponent (cl weights)
  type_id num_types = 1;    // --L
  std::uint64_t oracle_cap = kDefaultOracleCap;  // --cap
  std::vector<std::uint64_t> bench_sizes;        // --sizes
  std::vector<int> bench_workers;                // --bench-threads
  int top_k = 10;           // variants per class in summary output
  std::ostream* log = &std::cout;
};

namespace run_detail {

inline HeteroGraph load_input(const RunConfig& cfg) {
  if (!cfg.cache.empty() && std::filesystem::exists(cfg.cache))
    return load_binary(cfg.cache);
  if (cfg.graph.empty()) throw parse_error("no input graph given (--graph)");
  if (cfg.types.empty())
    throw parse_error("no node types file given (--types)");
  HeteroGraph g = load_edge_list(cfg.graph, cfg.types);
  if (!cfg.cache.empty()) save_binary(g, cfg.cache);
  return g;
}

inline double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

inline void write_manifest(const std::string& path, const HeteroGraph& g,
                           const RunConfig& cfg, double wall_seconds,
                           std::uint64_t num_motifs) {
  nlohmann::json j;
  j["nodes"] = g.num_nodes;
  j["edges"] = g.num_edges;
  j["node_types"] = g.num_node_types;
  j["edge_types"] = g.num_edge_types;
  j["workers"] = cfg.workers;
  j["max_k"] = cfg.max_k;
  j["emit"] = cfg.emit;
  j["motifs"] = num_motifs;
  j["wall_time_sec"] = wall_seconds;
  j["self_loops_dropped"] = g.stats.self_loops;
  j["duplicate_edges_dropped"] = g.stats.duplicate_edges;
  std::ofstream os(path);
  if (!os) throw parse_error("cannot write manifest: " + path);
  os << j.dump(2) << '\n';
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw parse_error("cannot write output file: " + path);
  return os;
}

}  // namespace run_detail

/// count: per-edge sparse counts + lookup table + run manifest.
inline int run_count(const RunConfig& cfg) {
  const HeteroGraph g = run_detail::load_input(cfg);
  if (g.stats.self_loops)
    *cfg.log << "warning: dropped " << g.stats.self_loops << " self-loops\n";
  if (g.stats.duplicate_edges)
    *cfg.log << "warning: merged " << g.stats.duplicate_edges
             << " duplicate edges\n";

  const auto start = std::chrono::steady_clock::now();
  const LocalCounts counts =
      count_all(g, {.workers = cfg.workers, .max_k = cfg.max_k});
  const double wall = run_detail::seconds_since(start);

  const std::string prefix = cfg.out.empty() ? std::string("tglet") : cfg.out;
  std::uint64_t num_motifs = 0;
  if (cfg.emit == "graphlet") {
    const GraphletIdTable table(graphlet_key_union(counts.per_edge));
    num_motifs = table.keys.size();
    auto cf = run_detail::open_out(prefix + ".counts");
    write_counts_file_graphlets(cf, g, counts.per_edge, table);
    auto lf = run_detail::open_out(prefix + ".lookup");
    write_lookup_file_graphlets(lf, table);
  } else if (cfg.emit == "orbit") {
    const MotifIdTable table(counts.motifs);
    num_motifs = table.keys.size();
    auto cf = run_detail::open_out(prefix + ".counts");
    write_counts_file(cf, g, counts.per_edge, table);
    auto lf = run_detail::open_out(prefix + ".lookup");
    write_lookup_file(lf, table);
  } else {
    throw parse_error("unknown emit mode: " + cfg.emit);
  }
  run_detail::write_manifest(prefix + ".manifest.json", g, cfg, wall,
                             num_motifs);
  *cfg.log << "counted " << g.num_edges << " edges, " << num_motifs
           << " typed motifs, " << wall << " s\n";
  return kExitOk;
}

/// global: whole-graph typed graphlet frequencies.
inline int run_global(const RunConfig& cfg) {
  const HeteroGraph g = run_detail::load_input(cfg);
  const auto start = std::chrono::steady_clock::now();
  const LocalCounts counts =
      count_all(g, {.workers = cfg.workers, .max_k = cfg.max_k});
  const GlobalCounts gc = global_counts(counts.per_edge, g);
  const double wall = run_detail::seconds_since(start);

  const std::string prefix = cfg.out.empty() ? std::string("tglet") : cfg.out;
  auto of = run_detail::open_out(prefix + ".global");
  for (std::size_t a = 0; a < gc.pairs.size(); ++a) {
    const auto& [key, cnt] = gc.pairs[a];
    const GraphletDesc d = decode_graphlet(key);
    of << (a + 1) << ' ' << graphlet_name(d.graphlet) << ' '
       << format_type_multiset(d.type_span()) << ' ' << cnt << '\n';
  }
  run_detail::write_manifest(prefix + ".manifest.json", g, cfg, wall,
                             gc.pairs.size());
  *cfg.log << gc.pairs.size() << " typed graphlets, " << wall << " s\n";
  return kExitOk;
}

/// summary: observed/possible/forbidden per class, top typed variants with
/// relative frequencies, entropy per class. Two CSV files.
inline int run_summary(const RunConfig& cfg) {
  const HeteroGraph g = run_detail::load_input(cfg);
  const LocalCounts counts =
      count_all(g, {.workers = cfg.workers, .max_k = cfg.max_k});
  const GlobalCounts gc = global_counts(counts.per_edge, g);

  const std::string prefix = cfg.out.empty() ? std::string("tglet") : cfg.out;
  auto sf = run_detail::open_out(prefix + ".summary.csv");
  sf << "class,observed,possible,forbidden,entropy_bits,total_count\n";
  for (const ClassSummary& cs : unique_counts_summary(gc)) {
    const MotifDistribution d = typed_distribution(gc, cs.graphlet);
    std::uint64_t total = 0;
    for (const auto& [_, cnt] : d.counts) total += cnt;
    sf << graphlet_name(cs.graphlet) << ',' << cs.observed << ','
       << cs.possible << ',' << cs.forbidden << ','
       << (d.probs.empty() ? 0.0 : entropy_bits(d)) << ',' << total << '\n';
  }

  auto vf = run_detail::open_out(prefix + ".variants.csv");
  vf << "class,rank,types,count,fraction\n";
  for (int h = 0; h < kNumGraphlets; ++h) {
    const MotifDistribution d =
        typed_distribution(gc, static_cast<Graphlet>(h));
    const int limit = std::min<int>(cfg.top_k, d.probs.size());
    for (int a = 0; a < limit; ++a) {
      const auto& [key, p] = d.probs[a];
      const GraphletDesc desc = decode_graphlet(key);
      vf << graphlet_name(desc.graphlet) << ',' << (a + 1) << ','
         << format_type_multiset(desc.type_span()) << ','
         << gc.count(key) << ',' << p << '\n';
    }
  }
  *cfg.log << "summary written to " << prefix << ".summary.csv\n";
  return kExitOk;
}

/// generate: synthesize a graph and write the text formats.
inline int run_generate(const RunConfig& cfg) {
  if (cfg.n < 2) throw parse_error("--n must be at least 2");
  HeteroGraph g;
  if (cfg.model == "er") {
    double p = cfg.p;
    if (p <= 0.0 && cfg.avg_degree > 0.0)
      p = cfg.avg_degree / static_cast<double>(cfg.n - 1);
    if (p <= 0.0) throw parse_error("give --p or --avg-deg for the ER model");
    g = gen_er(cfg.n, p, cfg.seed);
  } else if (cfg.model == "cl") {
    const double avg = cfg.avg_degree > 0.0 ? cfg.avg_degree : 10.0;
    const double gamma = cfg.exponent > 0.0 ? cfg.exponent : 2.5;
    g = gen_chung_lu_powerlaw(cfg.n, gamma, avg, cfg.seed);
  } else {
    throw parse_error("unknown model: " + cfg.model);
  }
  if (cfg.num_types > 1) g = assign_types_uniform(g, cfg.num_types, cfg.seed);

  const std::string prefix = cfg.out.empty() ? std::string("graph") : cfg.out;
  write_edge_list(g, prefix + ".edges", prefix + ".types");
  *cfg.log << "generated " << g.num_nodes << " nodes, " << g.num_edges
           << " edges, " << g.num_node_types << " types -> " << prefix
           << ".edges\n";
  return kExitOk;
}

/// verify: exact engine-vs-oracle comparison on every edge.
inline int run_verify(const RunConfig& cfg) {
  const HeteroGraph g = run_detail::load_input(cfg);
  const LocalCounts engine =
      count_all(g, {.workers = cfg.workers, .max_k = 4});
  const std::vector<EdgeLocalCounts> reference =
      oracle_all_edges(g, cfg.oracle_cap);
  const std::vector<CountDiff> diffs = diff_counts(engine.per_edge, reference);
  if (diffs.empty()) {
    *cfg.log << "PASS: " << g.num_edges
             << " edges match the brute-force oracle exactly\n";
    return kExitOk;
  }
  *cfg.log << "FAIL: " << diffs.size() << " differing counts\n";
  std::size_t shown = 0;
  for (const CountDiff& d : diffs) {
    if (shown++ == 50) {
      *cfg.log << "  ... (" << diffs.size() - 50 << " more)\n";
      break;
    }
    const auto [i, j] = g.edge_list[d.edge];
    *cfg.log << "  edge (" << g.node_label[i] << ',' << g.node_label[j]
             << ") " << describe(d.key) << ": engine=" << d.lhs
             << " oracle=" << d.rhs << '\n';
  }
  return kExitVerifyFailed;
}

/// bench: wall times over generated ER graphs for scaling studies. CSV rows
/// n,edges,workers,seconds.
inline int run_bench(const RunConfig& cfg) {
  std::vector<std::uint64_t> sizes = cfg.bench_sizes;
  if (sizes.empty()) sizes = {1000, 10000, 100000};
  std::vector<int> workers = cfg.bench_workers;
  if (workers.empty()) workers = {cfg.workers};
  const double avg = cfg.avg_degree > 0.0 ? cfg.avg_degree : 10.0;

  std::ofstream file;
  std::ostream* os = cfg.log;
  if (!cfg.out.empty()) {
    file = run_detail::open_out(cfg.out + ".bench.csv");
    os = &file;
  }
  *os << "n,edges,workers,seconds\n";
  for (std::uint64_t n : sizes) {
    HeteroGraph g = gen_er(n, avg / static_cast<double>(n - 1), cfg.seed);
    if (cfg.num_types > 1) g = assign_types_uniform(g, cfg.num_types, cfg.seed);
    for (int w : workers) {
      const auto start = std::chrono::steady_clock::now();
      const LocalCounts counts = count_all(g, {.workers = w, .max_k = 4});
      const double wall = run_detail::seconds_since(start);
      *os << n << ',' << g.num_edges << ',' << w << ',' << wall << '\n';
      (void)counts;
    }
  }
  return kExitOk;
}

}  // namespace tglet

#endif  // TGLET_RUNNER_HPP
