// Copyright 2026 The cayleymd Authors
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

// cayleymd: metric dimension of Cayley graphs on finite Abelian groups.
//
//   cayleymd dim --group Z10 --set 2,8,5
//   cayleymd dim --family prism:2,5 --format json
//   cayleymd sweep --orders 5..24 --jobs 8
//   cayleymd export --group Z10 --set 2,8,5 --out prism.dot
//   cayleymd mobius --max-param 24

#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cayleymd/cli.hpp"

namespace {

using cayleymd::cli::RunConfig;

void add_input_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--group", cfg.group, "Group literal, e.g. Z6 or Z2xZ4");
  cmd->add_option("--set", cfg.set, "Connection set, e.g. 1,5,3 or (1,0);(0,2);(1,2)");
  cmd->add_option("--family", cfg.family,
                  "prism:m,n | mobius:N | hypercube:d | cycle:n | complete:n | path:n");
  cmd->add_option("--graph", cfg.graph_path, "Graph file (.dot/.gv or adjacency list)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric dimension of Cayley graphs on finite Abelian groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string variant = "proof-consistent";
  std::string convention = "vertices";
  std::string format;
  std::size_t cap = cfg.cap;
  std::size_t jobs = cfg.jobs;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "Largest landmark count tried by the exact search")
        ->envname("CAYLEYMD_CAP")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->envname("CAYLEYMD_JOBS");
    cmd->add_option("--format", format, "text | json | csv");
    cmd->add_option("--out", cfg.out_path, "Write the report to this file");
    cmd->add_option("--convention", convention, "Mobius ladder parameter: vertices | rungs");
  };

  auto* dim = app.add_subcommand("dim", "Exact metric dimension and witness");
  add_input_flags(dim, cfg);
  add_common(dim);
  dim->add_flag("--table", cfg.table, "Include the full representation table");

  auto* sweep = app.add_subcommand("sweep", "Verify the dimension-2 characterization over all Abelian groups");
  add_common(sweep);
  sweep->add_option("--orders", cfg.orders, "Group orders a..b")->capture_default_str();
  sweep->add_option("--variant", variant, "as-stated | proof-consistent | both")->capture_default_str();
  sweep->add_option("--max-set", cfg.max_set_size, "Largest connection set size")->capture_default_str();

  auto* exp = app.add_subcommand("export", "Write a graph as DOT");
  add_input_flags(exp, cfg);
  add_common(exp);

  auto* mob = app.add_subcommand("mobius", "Mobius ladder indexing cross-check");
  add_common(mob);
  mob->add_option("--max-param", cfg.max_param, "Largest even ladder parameter")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.cap = cap;
    cfg.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    cfg.variant = cayleymd::parse_gate_variant(variant);
    cfg.convention = cayleymd::parse_mobius_convention(convention);
    if (!format.empty()) cfg.format = cayleymd::cli::parse_format(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return cayleymd::cli::run(cfg);
}
