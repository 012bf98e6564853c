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

#include "mecedge/verify.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "mecedge/baselines.h"
#include "mecedge/simulator.h"

namespace mecedge {

namespace {

SystemConfig WithServers(SystemConfig cfg, int K) {
  cfg.K = K;
  cfg.d.assign(K, cfg.d.front());
  cfg.kappa.assign(K, cfg.kappa.front());
  cfg.L.assign(K, cfg.L.front());
  cfg.w.assign(K, 1.0 / K);
  cfg.lambda.assign(K, cfg.lambda.front());
  return cfg;
}

struct Instance {
  std::vector<double> Q;
  std::vector<double> Gamma;
};

Instance RandomInstance(const SystemConfig& cfg, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> backlog(0.0, 1.5e6);
  std::exponential_distribution<double> fading(1.0);
  Instance in;
  for (int k = 0; k < cfg.K; ++k) {
    in.Q.push_back(backlog(rng));
    in.Gamma.push_back(CompositeGain(cfg, k, fading(rng)));
  }
  return in;
}

CheckResult OracleCheck(const SystemConfig& base, const VerifyOptions& opt) {
  const SystemConfig cfg = WithServers(base, 2);
  std::mt19937_64 rng(opt.seed);
  double worst = -1e300;
  for (int i = 0; i < opt.instances; ++i) {
    const Instance in = RandomInstance(cfg, rng);
    const double solver = SolveSlot(in.Q, in.Gamma, cfg, opt.settings).objective;
    const double grid = GridSolveSlot(in.Q, in.Gamma, cfg, opt.grid).objective;
    worst = std::max(worst, (solver - grid) / std::max(std::abs(grid), 1.0));
  }
  return {"joint solver vs grid oracle (K=2)", worst <= opt.oracle_rel_slack,
          fmt::format("{} instances, worst (solver - grid)/|grid| = {:.3e}",
                      opt.instances, worst)};
}

CheckResult SingleServerCheck(const SystemConfig& base,
                              const VerifyOptions& opt) {
  const SystemConfig cfg = WithServers(base, 1);
  std::mt19937_64 rng(opt.seed + 1);
  const double f_step = cfg.f_max / (opt.grid.points_f - 1);
  const double p_step = cfg.p_tx_max / (opt.grid.points_p - 1);
  int failures = 0;
  for (int i = 0; i < opt.instances; ++i) {
    const Instance in = RandomInstance(cfg, rng);
    const SlotSolution grid = GridSolveSlot(in.Q, in.Gamma, cfg, opt.grid);
    const double f = OptimalFrequency(in.Q[0], cfg, 0);
    const double p = OptimalTxPower(in.Q[0], 1.0, in.Gamma[0], cfg, 0);
    if (std::abs(grid.action.f[0] - f) > f_step ||
        std::abs(grid.action.p_tx[0] - p) > p_step) {
      ++failures;
    }
  }
  return {"closed forms vs grid (K=1)", failures == 0,
          fmt::format("{} of {} instances off by more than one grid step",
                      failures, opt.instances)};
}

CheckResult DominanceCheck(const SystemConfig& base,
                           const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  double worst = -1e300;
  for (int i = 0; i < opt.dominance_instances; ++i) {
    const SystemConfig cfg = WithServers(base, i % 2 == 0 ? 2 : 7);
    const Instance in = RandomInstance(cfg, rng);
    const double joint = SolveSlot(in.Q, in.Gamma, cfg, opt.settings).objective;
    const double even =
        SolveSlotEven(in.Q, in.Gamma, cfg, opt.settings).objective;
    worst = std::max(worst, joint - even);
  }
  return {"joint solver never worse than even split", worst <= 1e-9,
          fmt::format("{} instances, worst joint - even = {:.3e}",
                      opt.dominance_instances, worst)};
}

CheckResult DriftBoundCheck(const SystemConfig& cfg, const VerifyOptions& opt) {
  const RunMetrics m = Run(cfg, Policy::kOptimal, opt.settings);
  int violations_printed = 0;
  int violations_ln2 = 0;
  double min_printed = 1e300;
  for (const auto& r : m.records) {
    const LemmaCheck c = CheckLemma1(r, cfg);
    if (c.slack_printed < 0.0) ++violations_printed;
    if (c.slack_ln2 < 0.0) ++violations_ln2;
    min_printed = std::min(min_printed, c.slack_printed);
  }
  return {"per-slot drift bound", violations_printed == 0 && violations_ln2 == 0,
          fmt::format("{} slots, violations printed/ln2 = {}/{}, min slack {:.3e}",
                      m.records.size(), violations_printed, violations_ln2,
                      min_printed)};
}

}  // namespace

std::vector<CheckResult> RunVerification(const SystemConfig& cfg,
                                         const VerifyOptions& options) {
  cfg.Validate();
  return {SingleServerCheck(cfg, options), OracleCheck(cfg, options),
          DominanceCheck(cfg, options), DriftBoundCheck(cfg, options)};
}

}  // namespace mecedge
