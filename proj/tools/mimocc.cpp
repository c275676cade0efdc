// Copyright 2026 The mimocc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "mimocc/cli.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kGuardExceeded = 3 };

struct Args {
  std::string config;
  std::string policy = "all";
  std::string strategy = "all";
  std::string format = "csv";
  int precision = 4;
  std::string axis;
  std::string out;
  std::string table;
  std::string dump;
};

void add_common(CLI::App* cmd, Args& a, bool needs_config) {
  auto* c = cmd->add_option("--config", a.config, "JSON network configuration");
  if (needs_config) c->required();
  cmd->add_option("--policy", a.policy, "opt, cmb, lin, a comma list, or all");
  cmd->add_option("--format", a.format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  cmd->add_option("--precision", a.precision, "fractional digits of decimal DoF")->check(CLI::Range(0, 30));
  cmd->add_option("--out", a.out, "write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mimocc;
  CLI::App app{"Degrees-of-freedom planner for multi-antenna coded caching with heterogeneous receivers"};
  app.require_subcommand(1);
  Args a;

  auto* dof = app.add_subcommand("dof", "DoF of every (policy, strategy) pair");
  add_common(dof, a, true);
  dof->add_option("--strategy", a.strategy, "min-G, grouping, super-grouping, sph, phantom, a comma list, or all");

  auto* sweep = app.add_subcommand("sweep", "DoF along one parameter axis");
  add_common(sweep, a, true);
  sweep->add_option("--strategy", a.strategy, "strategy filter");
  sweep->add_option("--axis", a.axis, "NAME=a..b[:step] or NAME=v1,v2 with NAME in L, gamma, K<j>, G<j>")->required();

  auto* partition = app.add_subcommand("partition", "Super-grouping grid over consecutive partitions");
  add_common(partition, a, true);

  auto* phantom = app.add_subcommand("phantom", "Multi-round Phantom plan");
  add_common(phantom, a, true);

  auto* verify = app.add_subcommand("verify", "Build the explicit schedule and audit it");
  add_common(verify, a, true);
  verify->add_option("--dump", a.dump, "write the schedule, one interval per line");

  auto* table = app.add_subcommand("table", "Recompute a reference table (III, IV or V)");
  add_common(table, a, false);
  table->add_option("name", a.table, "III, IV or V")->required()->check(CLI::IsMember({"III", "IV", "V"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;
  try {
    cli::Options opt;
    opt.policies = cli::parse_policy_list(a.policy);
    opt.strategies = cli::parse_strategy_list(a.strategy);
    opt.precision = a.precision;
    auto format = *cli::parse_format(a.format);
    if (!a.out.empty()) {
      file = std::make_unique<std::ofstream>(a.out);
      if (!*file) throw Error(ErrorCode::ParseError, "cannot write '" + a.out + "'");
      os = file.get();
    }

    if (*sweep) {
      auto raw = cli::read_raw_config(a.config);
      cli::render(*os, cli::cmd_sweep(raw, cli::parse_axis(a.axis), opt), format);
      return kOk;
    }
    if (*table) {
      cli::render(*os, cli::cmd_table(a.table, a.precision), format);
      return kOk;
    }
    const NetworkConfig cfg = cli::parse_config(a.config);
    if (*dof) cli::render(*os, cli::cmd_dof(cfg, opt), format);
    if (*partition) cli::render(*os, cli::cmd_partition(cfg, opt), format);
    if (*phantom) cli::render(*os, cli::cmd_phantom(cfg, opt), format);
    if (*verify) {
      std::unique_ptr<std::ofstream> dump;
      if (!a.dump.empty()) {
        dump = std::make_unique<std::ofstream>(a.dump);
        if (!*dump) throw Error(ErrorCode::ParseError, "cannot write '" + a.dump + "'");
      }
      auto res = cli::cmd_verify(cfg, opt, dump.get());
      cli::render(*os, res.table, format);
      return res.passed ? kOk : kVerifyFailed;
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::GuardExceeded ? kGuardExceeded : kInputError;
  }
}
