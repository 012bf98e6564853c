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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mecedge/simulator.h"

namespace mecedge {
namespace {

TEST_CASE("arrival sampling") {
  SUBCASE("zero rate gives zero") {
    RandomStreams s(1, 2);
    const ArrivalModel model{{0.0, 0.0}, 10.0};
    for (int i = 0; i < 100; ++i) {
      for (double a : SampleArrivals(model, s.arrivals)) CHECK(a == 0.0);
    }
  }
  SUBCASE("mean over 1e5 slots at 4.37e5 bits") {
    RandomStreams s(5, 1);
    const ArrivalModel model{{4.37e5}, 8.74e5};
    double sum = 0.0;
    const int n = 100'000;
    for (int i = 0; i < n; ++i) {
      const double a = SampleArrivals(model, s.arrivals)[0];
      REQUIRE(a >= 0.0);
      REQUIRE(a <= model.A_max);
      sum += a;
    }
    CHECK(std::abs(sum / n - 4.37e5) <= 0.01 * 4.37e5);
  }
  SUBCASE("draws above A_max are clamped") {
    RandomStreams s(2, 1);
    const ArrivalModel model{{100.0}, 90.0};
    int clamped = 0;
    for (int i = 0; i < 2000; ++i) {
      const double a = SampleArrivals(model, s.arrivals)[0];
      CHECK(a <= 90.0);
      if (a == 90.0) ++clamped;
    }
    // P(Poisson(100) >= 90) is about 0.85.
    CHECK(clamped > 1500);
  }
}

TEST_CASE("channel sampling") {
  const SystemConfig cfg = SystemConfig::Default();
  const ChannelModel model = MakeChannelModel(cfg);

  SUBCASE("unit-mean exponential fading") {
    RandomStreams s(9, 7);
    double sum = 0.0;
    int n = 0;
    for (int i = 0; i < 100'000 / 7 + 1; ++i) {
      const ChannelRealization ch = SampleChannels(model, s.channels);
      for (int k = 0; k < 7; ++k) {
        REQUIRE(ch.gamma[k] > 0.0);
        CHECK(ch.Gamma[k] == CompositeGain(cfg, k, ch.gamma[k]));
        sum += ch.gamma[k];
        ++n;
      }
    }
    CHECK(std::abs(sum / n - 1.0) <= 0.01);
  }
  SUBCASE("reference geometry at unit fading") {
    CHECK(CompositeGain(cfg, 0, 1.0) ==
          doctest::Approx(1e-4 * std::pow(1.0 / 200.0, 4)).epsilon(1e-12));
    CHECK(CompositeGain(cfg, 0, 1.0) == doctest::Approx(6.25e-14).epsilon(1e-12));
  }
  SUBCASE("equal seeds replay the same sequence") {
    RandomStreams a(123, 7), b(123, 7), c(124, 7);
    bool differs = false;
    for (int i = 0; i < 50; ++i) {
      const auto x = SampleChannels(model, a.channels);
      const auto y = SampleChannels(model, b.channels);
      const auto z = SampleChannels(model, c.channels);
      CHECK(x.gamma == y.gamma);
      differs = differs || x.gamma != z.gamma;
    }
    CHECK(differs);
  }
}

TEST_CASE("policy parsing") {
  CHECK(ParsePolicy("optimal") == Policy::kOptimal);
  CHECK(ParsePolicy("even") == Policy::kEven);
  CHECK(PolicyName(Policy::kEven) == "even");
  CHECK_THROWS_AS(ParsePolicy("greedy"), std::invalid_argument);
}

TEST_CASE("no arrivals: queues and power stay at zero") {
  SystemConfig cfg = SystemConfig::Default();
  cfg.lambda.assign(7, 0.0);
  cfg.horizon = 200;
  for (Policy p : {Policy::kOptimal, Policy::kEven}) {
    const RunMetrics m = Run(cfg, p);
    CHECK(m.avg_power == 0.0);
    CHECK(m.avg_queue == 0.0);
    for (const auto& r : m.records) {
      for (double q : r.Q_next) CHECK(q == 0.0);
    }
  }
}

TEST_CASE("trace accounting") {
  SystemConfig cfg = SystemConfig::Default();
  cfg.horizon = 300;
  RunOptions options;
  options.check_invariants = true;
  const RunMetrics m = Run(cfg, Policy::kOptimal, {}, options);
  REQUIRE(m.records.size() == 300);

  std::vector<double> prev(7, 0.0);
  double power = 0.0;
  std::vector<double> queue(7, 0.0);
  for (const auto& r : m.records) {
    // The policy saw the backlog left by the previous slot.
    CHECK(r.Q == prev);
    for (int k = 0; k < 7; ++k) {
      CHECK(r.P[k] == doctest::Approx(cfg.kappa[k] * std::pow(r.action.f[k], 3) +
                                      r.action.p_tx[k]).epsilon(1e-14));
      CHECK(r.Q_next[k] == std::max(r.Q[k] + r.A[k] - (r.D_l[k] + r.D_tx[k]), 0.0));
      power += cfg.w[k] * r.P[k];
      queue[k] += r.Q_next[k];
    }
    prev = r.Q_next;
  }
  CHECK(m.avg_power == doctest::Approx(power / 300).epsilon(1e-9));
  double mean_queue = 0.0;
  for (int k = 0; k < 7; ++k) {
    CHECK(m.avg_queue_per_server[k] == doctest::Approx(queue[k] / 300).epsilon(1e-9));
    mean_queue += queue[k] / 300 / 7;
  }
  CHECK(m.avg_queue == doctest::Approx(mean_queue).epsilon(1e-9));
  CHECK(m.tail_slots == 60);
  double tail = 0.0;
  for (int t = 240; t < 300; ++t) {
    tail += std::accumulate(m.records[t].Q_next.begin(),
                            m.records[t].Q_next.end(), 0.0);
  }
  CHECK(m.tail_avg_queue == doctest::Approx(tail / (60 * 7)).epsilon(1e-9));
}

TEST_CASE("common random numbers across policies") {
  SystemConfig cfg = SystemConfig::Default();
  cfg.horizon = 100;
  const RunMetrics a = Run(cfg, Policy::kOptimal);
  const RunMetrics b = Run(cfg, Policy::kEven);
  for (int t = 0; t < 100; ++t) {
    CHECK(a.records[t].A == b.records[t].A);
    CHECK(a.records[t].gamma == b.records[t].gamma);
  }
}

TEST_CASE("identical seed gives identical traces") {
  SystemConfig cfg = SystemConfig::Default();
  cfg.horizon = 150;
  const RunMetrics a = Run(cfg, Policy::kOptimal);
  const RunMetrics b = Run(cfg, Policy::kOptimal);
  for (int t = 0; t < 150; ++t) {
    CHECK(a.records[t].Q_next == b.records[t].Q_next);
    CHECK(a.records[t].action.a == b.records[t].action.a);
  }
  CHECK(a.avg_power == b.avg_power);
}

}  // namespace
}  // namespace mecedge
