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

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mecedge/model.h"

namespace mecedge {
namespace {

SystemConfig PlainConfig() {
  SystemConfig cfg = SystemConfig::Default();
  cfg.N0 = 2e-20;
  return cfg;
}

TEST_CASE("local bits are tau f / L") {
  CHECK(LocalBits(0.0, 3000.0, 0.5) == 0.0);
  CHECK(LocalBits(2e9, 3000.0, 0.5) == doctest::Approx(333333.3333333333));
  CHECK(LocalBits(1e9, 3000.0, 0.5) == doctest::Approx(166666.6666666667));
  CHECK(LocalBits(3e8, 3000.0, 0.5) == doctest::Approx(3.0 * LocalBits(1e8, 3000.0, 0.5)));
}

TEST_CASE("local power is kappa f^3") {
  CHECK(LocalPower(0.0, 1e-26) == 0.0);
  CHECK(LocalPower(2e9, 1e-26) == doctest::Approx(80.0));
  CHECK(LocalPower(1e9, 1e-26) == doctest::Approx(10.0));
}

TEST_CASE("offloaded bits") {
  const SystemConfig cfg = PlainConfig();
  const double Gamma = CompositeGain(cfg, 0, 1.0);
  CHECK(Gamma == doctest::Approx(6.25e-14).epsilon(1e-12));

  SUBCASE("zero power sends nothing") {
    CHECK(TxBits(1.0, 0.0, Gamma, cfg) == 0.0);
    CHECK(TxBits(cfg.epsilon, 0.0, Gamma, cfg) == 0.0);
  }
  SUBCASE("full band at 5 W") {
    // 1e6 * log2(1 + 7.8125)
    CHECK(TxBits(1.0, 5.0, Gamma, cfg) ==
          doctest::Approx(3139551.3523987937).epsilon(1e-12));
  }
  SUBCASE("non-positive share is rejected") {
    CHECK_THROWS_AS(TxBits(0.0, 1.0, Gamma, cfg), std::domain_error);
    CHECK_THROWS_AS(TxBits(-0.1, 1.0, Gamma, cfg), std::domain_error);
  }
}

TEST_CASE("reference units give SNR near 7.81 at full band and 5 W") {
  const SystemConfig cfg = SystemConfig::Default();
  CHECK(cfg.N0 == doctest::Approx(std::pow(10.0, -19.7)).epsilon(1e-12));
  CHECK(cfg.g0 == doctest::Approx(1e-4).epsilon(1e-12));
  const double snr = CompositeGain(cfg, 0, 1.0) * 5.0 / (cfg.N0 * cfg.W);
  CHECK(snr == doctest::Approx(7.831050525426116).epsilon(1e-10));
}

TEST_CASE("offloaded bits are positively homogeneous in (a, p)") {
  const SystemConfig cfg = PlainConfig();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> share(1e-3, 0.5);
  std::uniform_real_distribution<double> power(0.0, 5.0);
  std::uniform_real_distribution<double> scale(0.1, 2.0);
  std::exponential_distribution<double> fading(1.0);
  for (int i = 0; i < 500; ++i) {
    const double a = share(rng);
    const double p = power(rng);
    const double c = scale(rng);
    const double G = CompositeGain(cfg, 0, fading(rng));
    const double base = TxBits(a, p, G, cfg);
    CHECK(TxBits(c * a, c * p, G, cfg) ==
          doctest::Approx(c * base).epsilon(1e-12));
  }
}

TEST_CASE("offloaded bits grow with power and gain") {
  const SystemConfig cfg = PlainConfig();
  const double G = CompositeGain(cfg, 0, 1.0);
  double prev = 0.0;
  for (double p = 0.25; p <= 5.0; p += 0.25) {
    const double bits = TxBits(0.2, p, G, cfg);
    CHECK(bits > prev);
    prev = bits;
  }
  prev = 0.0;
  for (double g = 0.1; g <= 4.0; g += 0.1) {
    const double bits = TxBits(0.2, 1.0, CompositeGain(cfg, 0, g), cfg);
    CHECK(bits > prev);
    prev = bits;
  }
}

TEST_CASE("queue update") {
  NetworkState s{4, {0.0, 100.0, 10.0}};
  const std::vector<double> A = {0.0, 50.0, 5.0};
  const std::vector<double> served = {123.0, 30.0, 100.0};
  const NetworkState next = StepQueue(s, A, served);
  CHECK(next.t == 5);
  CHECK(next.Q[0] == 0.0);
  CHECK(next.Q[1] == 120.0);
  CHECK(next.Q[2] == 0.0);
}

TEST_CASE("queues stay non-negative under arbitrary step sequences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> amount(0.0, 1e6);
  NetworkState s{0, std::vector<double>(5, 0.0)};
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> A(5), served(5);
    for (int k = 0; k < 5; ++k) {
      A[k] = amount(rng);
      served[k] = amount(rng);
    }
    s = StepQueue(s, A, served);
    for (double q : s.Q) REQUIRE(q >= 0.0);
  }
}

TEST_CASE("configuration invariants") {
  SUBCASE("reference config is valid without warnings") {
    CHECK(SystemConfig::Default().Validate().empty());
  }
  SUBCASE("bandwidth floor must leave room for K servers") {
    SystemConfig cfg = SystemConfig::Default();
    cfg.epsilon = 1.0 / 7.0;
    CHECK_THROWS_AS(cfg.Validate(), ConfigError);
    cfg.epsilon = 0.0;
    CHECK_THROWS_AS(cfg.Validate(), ConfigError);
  }
  SUBCASE("per-server vectors must have length K") {
    SystemConfig cfg = SystemConfig::Default();
    cfg.L.pop_back();
    CHECK_THROWS_AS(cfg.Validate(), ConfigError);
  }
  SUBCASE("non-positive physical quantities are rejected") {
    SystemConfig cfg = SystemConfig::Default();
    cfg.V = 0.0;
    CHECK_THROWS_AS(cfg.Validate(), ConfigError);
    cfg = SystemConfig::Default();
    cfg.w[2] = -1.0;
    CHECK_THROWS_AS(cfg.Validate(), ConfigError);
  }
  SUBCASE("A_max below lambda warns") {
    SystemConfig cfg = SystemConfig::Default();
    cfg.A_max = 1e5;
    CHECK(cfg.Validate().size() == 1);
  }
}

TEST_CASE("feasibility of actions") {
  const SystemConfig cfg = SystemConfig::Default();
  PolicyAction action = PolicyAction::Zero(cfg.K);
  CHECK(action.IsFeasible(cfg));
  action.a[0] = cfg.epsilon / 2;
  CHECK_FALSE(action.IsFeasible(cfg));
  action = PolicyAction::Zero(cfg.K);
  action.a[0] += 0.01;
  CHECK_FALSE(action.IsFeasible(cfg));
  action = PolicyAction::Zero(cfg.K);
  action.f[3] = cfg.f_max * 1.001;
  CHECK_FALSE(action.IsFeasible(cfg));
}

}  // namespace
}  // namespace mecedge
