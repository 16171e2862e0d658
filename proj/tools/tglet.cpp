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

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tglet/runner.hpp"

namespace {

void add_graph_options(CLI::App* cmd, tglet::RunConfig& cfg) {
  cmd->add_option("--graph", cfg.graph, "edge list file (\"src dst\" lines)");
  cmd->add_option("--types", cfg.types,
                  "node types file (\"node_id type_label\" lines)");
  cmd->add_option("--cache", cfg.cache,
                  "binary graph cache; created when missing, loaded when "
                  "present");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tglet: typed graphlet counts for every edge of a "
               "heterogeneous graph"};
  app.require_subcommand(1);

  tglet::RunConfig cfg;
  int exit_code = tglet::kExitOk;

  auto* count = app.add_subcommand(
      "count", "per-edge typed graphlet orbit counts (sparse files)");
  add_graph_options(count, cfg);
  count->add_option("--out", cfg.out, "output path prefix");
  count->add_option("--threads", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  count->add_option("--max-k", cfg.max_k, "largest graphlet size, 3 or 4")
      ->check(CLI::Range(3, 4));
  count->add_option("--emit", cfg.emit, "orbit or graphlet level counts")
      ->check(CLI::IsMember({"orbit", "graphlet"}));
  count->callback([&] { exit_code = tglet::run_count(cfg); });

  auto* global = app.add_subcommand(
      "global", "whole-graph typed graphlet frequencies");
  add_graph_options(global, cfg);
  global->add_option("--out", cfg.out, "output path prefix");
  global->add_option("--threads", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  global->add_option("--max-k", cfg.max_k, "largest graphlet size, 3 or 4")
      ->check(CLI::Range(3, 4));
  global->callback([&] { exit_code = tglet::run_global(cfg); });

  auto* summary = app.add_subcommand(
      "summary", "observed/forbidden motifs, distributions and entropy");
  add_graph_options(summary, cfg);
  summary->add_option("--out", cfg.out, "output path prefix");
  summary->add_option("--threads", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  summary->add_option("--top", cfg.top_k, "typed variants listed per class");
  summary->callback([&] { exit_code = tglet::run_summary(cfg); });

  auto* generate = app.add_subcommand(
      "generate", "write a synthetic graph in the text formats");
  generate->add_option("--model", cfg.model, "er or cl")
      ->check(CLI::IsMember({"er", "cl"}));
  generate->add_option("--n", cfg.n, "number of nodes")->required();
  generate->add_option("--p", cfg.p, "ER edge probability");
  generate->add_option("--avg-deg", cfg.avg_degree, "target average degree");
  generate->add_option("--exponent", cfg.exponent,
                       "CL power-law exponent (default 2.5)");
  generate->add_option("--L", cfg.num_types, "uniform random node types");
  generate->add_option("--seed", cfg.seed, "generator seed");
  generate->add_option("--out", cfg.out, "output path prefix");
  generate->callback([&] { exit_code = tglet::run_generate(cfg); });

  auto* verify = app.add_subcommand(
      "verify", "compare engine counts against the brute-force oracle");
  add_graph_options(verify, cfg);
  verify->add_option("--threads", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--cap", cfg.oracle_cap, "oracle node-count cap");
  verify->callback([&] { exit_code = tglet::run_verify(cfg); });

  auto* bench = app.add_subcommand(
      "bench", "time ER sweeps for scaling studies (CSV)");
  bench->add_option("--sizes", cfg.bench_sizes, "node counts to sweep")
      ->delimiter(',');
  bench->add_option("--bench-threads", cfg.bench_workers,
                    "worker counts to sweep")
      ->delimiter(',');
  bench->add_option("--avg-deg", cfg.avg_degree, "target average degree");
  bench->add_option("--L", cfg.num_types, "uniform random node types");
  bench->add_option("--seed", cfg.seed, "generator seed");
  bench->add_option("--threads", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", cfg.out, "output path prefix");
  bench->callback([&] { exit_code = tglet::run_bench(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? tglet::kExitInputError : tglet::kExitOk;
  } catch (const tglet::internal_consistency_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return tglet::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tglet::kExitInputError;
  }
  return exit_code;
}
