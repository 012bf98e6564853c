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

#include "mecedge/baselines.h"

#include <stdexcept>

namespace mecedge {

SlotSolution SolveSlotEven(std::span<const double> Q,
                           std::span<const double> Gamma,
                           const SystemConfig& cfg,
                           const SolverSettings& settings) {
  settings.Validate();
  const int K = cfg.K;
  if (static_cast<int>(Q.size()) != K || static_cast<int>(Gamma.size()) != K) {
    throw std::invalid_argument("backlog and gain vectors must have length K");
  }
  if (1.0 / K < cfg.epsilon) {
    throw ConfigError("uniform split violates the bandwidth floor");
  }
  SlotSolution sol;
  sol.action = PolicyAction::Zero(K);
  for (int k = 0; k < K; ++k) {
    sol.action.f[k] = OptimalFrequency(Q[k], cfg, k);
    sol.action.p_tx[k] =
        OptimalTxPower(Q[k], sol.action.a[k], Gamma[k], cfg, k);
  }
  sol.objective = EvaluateObjective(sol.action, Q, Gamma, cfg);
  return sol;
}

}  // namespace mecedge
