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

#include <catch_amalgamated.hpp>

#include "test_util.hpp"
#include "tglet/graph.hpp"
#include "tglet/synth.hpp"

using namespace tglet;
using namespace tglet::testutil;

TEST_CASE("loads a triangle") {
  TempDir dir;
  const auto edges = write_file(dir, "g.edges", "0 1\n1 2\n0 2\n");
  const auto types = write_file(dir, "g.types", "0 1\n1 1\n2 1\n");
  const HeteroGraph g = load_edge_list(edges, types);
  CHECK(g.num_nodes == 3);
  CHECK(g.num_edges == 3);
  CHECK(g.num_node_types == 1);
  check_graph_invariants(g);
}

TEST_CASE("duplicate edges merge with a count") {
  TempDir dir;
  const auto edges = write_file(dir, "g.edges", "0 1\n0 1\n");
  const auto types = write_file(dir, "g.types", "0 a\n1 a\n");
  const HeteroGraph g = load_edge_list(edges, types);
  CHECK(g.num_edges == 1);
  CHECK(g.stats.duplicate_edges == 1);
  // reversed direction is the same undirected edge
  const auto edges2 = write_file(dir, "g2.edges", "0 1\n1 0\n2 0\n");
  const auto types2 = write_file(dir, "g2.types", "0 a\n1 a\n2 a\n");
  const HeteroGraph g2 = load_edge_list(edges2, types2);
  CHECK(g2.num_edges == 2);
  CHECK(g2.stats.duplicate_edges == 1);
}

TEST_CASE("self-loops are dropped and counted") {
  TempDir dir;
  const auto edges = write_file(dir, "g.edges", "0 0\n0 1\n");
  const auto types = write_file(dir, "g.types", "0 x\n1 x\n");
  const HeteroGraph g = load_edge_list(edges, types);
  CHECK(g.num_edges == 1);
  CHECK(g.stats.self_loops == 1);
}

TEST_CASE("loader errors carry context") {
  TempDir dir;
  const auto types = write_file(dir, "g.types", "0 a\n1 a\n");

  SECTION("edge endpoint without a type names the node") {
    const auto edges = write_file(dir, "g.edges", "0 7\n");
    CHECK_THROWS_WITH(load_edge_list(edges, types),
                      Catch::Matchers::ContainsSubstring("7"));
  }
  SECTION("empty edge set") {
    const auto edges = write_file(dir, "g.edges", "# nothing here\n");
    CHECK_THROWS_AS(load_edge_list(edges, types), parse_error);
  }
  SECTION("non-integer token reports the line") {
    const auto edges = write_file(dir, "g.edges", "0 1\nx 1\n");
    CHECK_THROWS_WITH(load_edge_list(edges, types),
                      Catch::Matchers::ContainsSubstring(":2:"));
  }
  SECTION("missing files") {
    CHECK_THROWS_AS(load_edge_list(dir.file("absent"), types), parse_error);
  }
  SECTION("conflicting duplicate type rows") {
    const auto edges = write_file(dir, "g.edges", "0 1\n");
    const auto bad = write_file(dir, "bad.types", "0 a\n0 b\n1 a\n");
    CHECK_THROWS_AS(load_edge_list(edges, bad), parse_error);
  }
}

TEST_CASE("nodes present only in the types file become isolated nodes") {
  TempDir dir;
  const auto edges = write_file(dir, "g.edges", "0 1\n");
  const auto types = write_file(dir, "g.types", "0 a\n1 a\n5 b\n");
  const HeteroGraph g = load_edge_list(edges, types);
  CHECK(g.num_nodes == 3);
  CHECK(g.num_edges == 1);
  CHECK(g.degree(2) == 0);  // original id 5
  CHECK(g.node_label[2] == 5);
  CHECK(g.node_type[2] == 2);  // label "b"
}

TEST_CASE("string type labels are densified with a reverse map") {
  TempDir dir;
  const auto edges = write_file(dir, "g.edges", "10 20\n20 30\n");
  const auto types =
      write_file(dir, "g.types", "10 blue\n20 red\n30 blue\n");
  const HeteroGraph g = load_edge_list(edges, types);
  CHECK(g.num_node_types == 2);
  CHECK(g.type_name[1] == "blue");
  CHECK(g.type_name[2] == "red");
  CHECK(g.node_label == std::vector<std::int64_t>{10, 20, 30});
  CHECK(g.node_type == std::vector<type_id>{1, 2, 1});
}

TEST_CASE("typed degree") {
  const HeteroGraph tri = triangle_graph();
  CHECK(typed_degree(tri, 0, 1) == 2);

  const HeteroGraph star = star_graph({1, 1, 2}, 1, 2);
  CHECK(typed_degree(star, 0, 1) == 2);
  CHECK(typed_degree(star, 0, 2) == 1);

  CHECK_THROWS_AS(typed_degree(tri, 99, 1), std::invalid_argument);
  CHECK_THROWS_AS(typed_degree(tri, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(typed_degree(tri, 0, 2), std::invalid_argument);
}

TEST_CASE("typed degrees partition the neighborhood") {
  HeteroGraph g = assign_types_uniform(gen_er(60, 0.15, 11), 4, 5);
  for (node_id v = 0; v < g.num_nodes; ++v) {
    std::uint64_t sum = 0;
    for (type_id t = 1; t <= g.num_node_types; ++t)
      sum += typed_degree(g, v, t);
    CHECK(sum == g.degree(v));
  }
}

TEST_CASE("max degree") {
  CHECK(max_degree(triangle_graph()) == 2);
  CHECK(max_degree(make_graph(3, {{0, 1}, {1, 2}}, {1, 1, 1}, 1)) == 2);
  CHECK(max_degree(star_graph({1, 1, 1, 1}, 1, 1)) == 4);
}

TEST_CASE("generated graphs satisfy the structural invariants") {
  check_graph_invariants(assign_types_uniform(gen_er(80, 0.1, 3), 3, 4));
}

TEST_CASE("text round-trip reproduces the graph exactly") {
  TempDir dir;

  SECTION("generated graph") {
    const HeteroGraph g = assign_types_uniform(gen_er(50, 0.12, 9), 3, 2);
    write_edge_list(g, dir.file("g.edges"), dir.file("g.types"));
    const HeteroGraph h = load_edge_list(dir.file("g.edges"),
                                         dir.file("g.types"));
    CHECK(g == h);
  }
  SECTION("sparse original ids, string labels, edge types") {
    const auto edges = write_file(dir, "g.edges",
                                  "100 7 cites\n7 42 cites\n42 100 likes\n");
    const auto types = write_file(dir, "g.types", "7 ml\n42 db\n100 ml\n");
    const HeteroGraph g = load_edge_list(edges, types);
    CHECK(g.num_edge_types == 2);
    write_edge_list(g, dir.file("h.edges"), dir.file("h.types"));
    const HeteroGraph h = load_edge_list(dir.file("h.edges"),
                                         dir.file("h.types"));
    CHECK(g == h);
  }
}

TEST_CASE("binary cache round-trip") {
  TempDir dir;
  const HeteroGraph g = assign_types_uniform(gen_er(40, 0.2, 5), 5, 6);
  save_binary(g, dir.file("g.bin"));
  CHECK(load_binary(dir.file("g.bin")) == g);

  write_file(dir, "junk.bin", "definitely not a cache");
  CHECK_THROWS_AS(load_binary(dir.file("junk.bin")), parse_error);
}
