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

#include <random>

#include "doctest.h"
#include "mecedge/baselines.h"
#include "mecedge/controller.h"

namespace mecedge {
namespace {

SystemConfig Servers(int K) {
  SystemConfig cfg = SystemConfig::Default();
  cfg.K = K;
  cfg.d.assign(K, 200.0);
  cfg.kappa.assign(K, 1e-26);
  cfg.L.assign(K, 3000.0);
  cfg.w.assign(K, 1.0 / K);
  cfg.lambda.assign(K, 4.37e5);
  return cfg;
}

TEST_CASE("even split with an empty system") {
  const SystemConfig cfg = SystemConfig::Default();
  const std::vector<double> Q(7, 0.0), G(7, CompositeGain(cfg, 0, 1.0));
  const SlotSolution sol = SolveSlotEven(Q, G, cfg);
  CHECK(sol.objective == 0.0);
  for (int k = 0; k < 7; ++k) {
    CHECK(sol.action.f[k] == 0.0);
    CHECK(sol.action.p_tx[k] == 0.0);
    CHECK(sol.action.a[k] == 1.0 / 7);
  }
}

TEST_CASE("identical servers: even split is the joint optimum") {
  const SystemConfig cfg = SystemConfig::Default();
  for (double Q0 : {1e3, 2e4, 4e5, 2e6}) {
    const std::vector<double> Q(7, Q0), G(7, CompositeGain(cfg, 0, 0.8));
    const SlotSolution even = SolveSlotEven(Q, G, cfg);
    const SlotSolution joint = SolveSlot(Q, G, cfg);
    for (int k = 0; k < 7; ++k) {
      CHECK(joint.action.f[k] == even.action.f[k]);
      CHECK(joint.action.a[k] == doctest::Approx(even.action.a[k]).epsilon(1e-9));
      CHECK(joint.action.p_tx[k] ==
            doctest::Approx(even.action.p_tx[k]).epsilon(1e-9));
    }
    CHECK(joint.objective == doctest::Approx(even.objective).epsilon(1e-12));
  }
}

TEST_CASE("joint solver dominates the even split") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> backlog(0.0, 1.5e6);
  std::exponential_distribution<double> fading(1.0);
  for (int K : {2, 7}) {
    const SystemConfig cfg = Servers(K);
    for (int i = 0; i < 200; ++i) {
      std::vector<double> Q(K), G(K);
      for (int k = 0; k < K; ++k) {
        Q[k] = backlog(rng);
        G[k] = CompositeGain(cfg, k, fading(rng));
      }
      CHECK(SolveSlot(Q, G, cfg).objective <=
            SolveSlotEven(Q, G, cfg).objective + 1e-9);
    }
  }
}

TEST_CASE("uniform split must respect the floor") {
  SystemConfig cfg = Servers(2);
  cfg.epsilon = 0.6;  // invalid config, but the baseline checks on its own
  const std::vector<double> Q(2, 1.0), G(2, 1e-14);
  CHECK_THROWS_AS(SolveSlotEven(Q, G, cfg), ConfigError);
}

}  // namespace
}  // namespace mecedge
