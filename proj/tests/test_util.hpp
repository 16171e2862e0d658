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

#ifndef TGLET_TESTS_TEST_UTIL_HPP
#define TGLET_TESTS_TEST_UTIL_HPP

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tglet/engine.hpp"
#include "tglet/graph.hpp"

namespace tglet::testutil {

inline HeteroGraph triangle_graph() {
  return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 1}, 1);
}

// path 0-1-2-3
inline HeteroGraph path4_graph(std::vector<type_id> types = {1, 1, 1, 1}) {
  return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}, std::move(types), 4);
}

inline HeteroGraph cycle4_graph() {
  return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 1, 1, 1}, 1);
}

inline HeteroGraph k4_graph(std::vector<type_id> types = {1, 1, 1, 1}) {
  return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                    std::move(types), 4);
}

// triangle {0,1,2} with pendant 3 attached to 0
inline HeteroGraph tailed_tri_graph() {
  return make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}, {1, 1, 1, 1}, 1);
}

// 4-cycle 0-1-2-3 with chord (0,2)
inline HeteroGraph chordal_graph() {
  return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}},
                    {1, 1, 1, 1}, 1);
}

// star: center 0 with the given leaf types
inline HeteroGraph star_graph(const std::vector<type_id>& leaf_types,
                              type_id center_type, type_id num_types) {
  std::vector<std::pair<node_id, node_id>> edges;
  std::vector<type_id> types = {center_type};
  for (std::size_t a = 0; a < leaf_types.size(); ++a) {
    edges.emplace_back(0, static_cast<node_id>(a + 1));
    types.push_back(leaf_types[a]);
  }
  return make_graph(leaf_types.size() + 1, std::move(edges), std::move(types),
                    num_types);
}

inline edge_id find_edge(const HeteroGraph& g, node_id a, node_id b) {
  for (edge_id e = 0; e < g.num_edges; ++e) {
    const auto [i, j] = g.edge_list[e];
    if ((i == a && j == b) || (i == b && j == a)) return e;
  }
  throw std::logic_error("test graph is missing the requested edge");
}

inline EdgeLocalCounts engine_counts(const HeteroGraph& g, node_id a,
                                     node_id b) {
  ScratchState s(g);
  return count_edge(g, find_edge(g, a, b), s);
}

// structural invariants every loaded or generated graph must satisfy
inline void check_graph_invariants(const HeteroGraph& g) {
  REQUIRE(g.offsets.size() == g.num_nodes + 1);
  REQUIRE(g.offsets.back() == 2 * g.num_edges);
  REQUIRE(g.neighbors.size() == 2 * g.num_edges);
  for (node_id v = 0; v < g.num_nodes; ++v) {
    REQUIRE(g.offsets[v] <= g.offsets[v + 1]);
    const auto block = g.neighbors_of(v);
    for (std::size_t a = 0; a < block.size(); ++a) {
      REQUIRE(block[a] < g.num_nodes);
      REQUIRE(block[a] != v);
      if (a > 0) REQUIRE(block[a - 1] < block[a]);  // strictly ascending
      REQUIRE(g.has_edge(block[a], v));             // symmetry
    }
    REQUIRE(g.node_type[v] >= 1);
    REQUIRE(g.node_type[v] <= g.num_node_types);
  }
  for (const auto& [i, j] : g.edge_list) {
    REQUIRE(g.has_edge(i, j));
    REQUIRE((g.degree(i) < g.degree(j) ||
             (g.degree(i) == g.degree(j) && i < j)));
  }
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path = std::filesystem::temp_directory_path() /
           ("tglet_test_" + std::to_string(rng()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }

  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

inline std::string write_file(const TempDir& dir, const std::string& name,
                              const std::string& contents) {
  const std::string p = dir.file(name);
  std::ofstream os(p);
  os << contents;
  return p;
}

inline std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace tglet::testutil

#endif  // TGLET_TESTS_TEST_UTIL_HPP
