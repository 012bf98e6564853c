/*
Copyright 2026 The mecedge Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Command-line front end: single runs, sweeps, self-checks and the
// optimal-vs-even comparison.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "mecedge/config_io.h"
#include "mecedge/experiment.h"
#include "mecedge/simulator.h"
#include "mecedge/verify.h"

namespace {

using mecedge::ExperimentPlan;
using mecedge::SystemConfig;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> slots;
  std::optional<double> V;
  std::string out;
  bool trace = false;
  int threads = 0;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--config", flags->config, "Configuration file");
  cmd->add_option("--seed", flags->seed, "RNG seed");
  cmd->add_option("--slots", flags->slots, "Number of slots")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--V", flags->V, "Drift/penalty trade-off V")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", flags->out, "Output directory");
  cmd->add_flag("--trace", flags->trace, "Write per-slot traces");
  cmd->add_option("--threads", flags->threads, "Worker threads (0 = auto)");
}

SystemConfig ResolveConfig(const CommonFlags& flags) {
  SystemConfig cfg = flags.config.empty() ? SystemConfig::Default()
                                          : mecedge::LoadConfig(flags.config);
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.slots) cfg.horizon = *flags.slots;
  if (flags.V) cfg.V = *flags.V;
  for (const auto& w : cfg.Validate()) fmt::print(std::cerr, "warning: {}\n", w);
  return cfg;
}

void PrintRows(const std::vector<mecedge::SummaryRow>& rows) {
  mecedge::WriteSummaryCsv(std::cout, rows);
}

int RunSingle(const CommonFlags& flags, const std::string& policy) {
  ExperimentPlan plan;
  plan.base = ResolveConfig(flags);
  plan.policies = {mecedge::ParsePolicy(policy)};
  plan.seeds = {plan.base.seed};
  plan.out_dir = flags.out;
  plan.trace = flags.trace;
  plan.threads = 1;
  if (plan.trace && plan.out_dir.empty()) {
    throw CLI::ValidationError("--trace", "needs --out");
  }
  PrintRows(mecedge::RunExperiment(plan));
  return 0;
}

int RunSweep(const CommonFlags& flags, const std::string& plan_path) {
  ExperimentPlan plan = mecedge::LoadPlan(plan_path);
  if (!flags.config.empty()) plan.base = mecedge::LoadConfig(flags.config);
  if (flags.seed) plan.seeds = {*flags.seed};
  if (flags.slots) plan.base.horizon = *flags.slots;
  if (flags.V) plan.base.V = *flags.V;
  if (!flags.out.empty()) plan.out_dir = flags.out;
  if (flags.trace) plan.trace = true;
  if (flags.threads > 0) plan.threads = flags.threads;
  PrintRows(mecedge::RunExperiment(plan));
  return 0;
}

int RunBaselineCompare(const CommonFlags& flags) {
  ExperimentPlan plan;
  plan.base = ResolveConfig(flags);
  plan.seeds = {plan.base.seed};
  plan.out_dir = flags.out;
  plan.trace = flags.trace;
  plan.threads = flags.threads;
  if (plan.trace && plan.out_dir.empty()) {
    throw CLI::ValidationError("--trace", "needs --out");
  }
  const auto rows = mecedge::RunExperiment(plan);
  PrintRows(rows);
  const auto& opt = rows.at(0);
  const auto& even = rows.at(1);
  fmt::print(std::cerr,
             "optimal: avg_power {:.4g} W, tail queue {:.4g} bits\n"
             "even:    avg_power {:.4g} W, tail queue {:.4g} bits\n",
             opt.avg_power, opt.tail_avg_queue, even.avg_power,
             even.tail_avg_queue);
  return 0;
}

int RunVerify(const CommonFlags& flags, int instances) {
  SystemConfig cfg = ResolveConfig(flags);
  mecedge::VerifyOptions options;
  options.instances = instances;
  bool ok = true;
  for (const auto& check : mecedge::RunVerification(cfg, options)) {
    fmt::print("[{}] {}: {}\n", check.passed ? "PASS" : "FAIL", check.name,
               check.detail);
    ok = ok && check.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online edge data-processing network simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string policy = "optimal";
  auto* run = app.add_subcommand("run", "Simulate one policy");
  AddCommonFlags(run, &run_flags);
  run->add_option("--policy", policy, "optimal|even")
      ->check(CLI::IsMember({"optimal", "even"}));

  CommonFlags sweep_flags;
  std::string plan_path;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep plan");
  AddCommonFlags(sweep, &sweep_flags);
  sweep->add_option("plan,--plan", plan_path, "Plan file")->required();

  CommonFlags verify_flags;
  int instances = 50;
  auto* verify = app.add_subcommand("verify", "Oracle and drift-bound checks");
  AddCommonFlags(verify, &verify_flags);
  verify->add_option("--instances", instances, "Random oracle instances")
      ->check(CLI::PositiveNumber);

  CommonFlags compare_flags;
  auto* compare = app.add_subcommand(
      "baseline-compare", "Optimal vs even split on common random numbers");
  AddCommonFlags(compare, &compare_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return RunSingle(run_flags, policy);
    if (*sweep) return RunSweep(sweep_flags, plan_path);
    if (*verify) return RunVerify(verify_flags, instances);
    if (*compare) return RunBaselineCompare(compare_flags);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return 2;
  }
  return 0;
}
