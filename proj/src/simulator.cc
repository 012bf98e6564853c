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

#include "mecedge/simulator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "mecedge/baselines.h"

namespace mecedge {

std::string_view PolicyName(Policy policy) {
  switch (policy) {
    case Policy::kOptimal:
      return "optimal";
    case Policy::kEven:
      return "even";
  }
  return "unknown";
}

Policy ParsePolicy(std::string_view name) {
  if (name == "optimal") return Policy::kOptimal;
  if (name == "even") return Policy::kEven;
  throw std::invalid_argument(
      fmt::format("unknown policy '{}' (expected optimal|even)", name));
}

ArrivalModel MakeArrivalModel(const SystemConfig& cfg) {
  return ArrivalModel{cfg.lambda, cfg.A_max};
}

ChannelModel MakeChannelModel(const SystemConfig& cfg) {
  return ChannelModel{cfg.g0, cfg.theta, cfg.d0, cfg.d};
}

RandomStreams::RandomStreams(std::uint64_t seed, int K) {
  const auto lo = static_cast<std::uint32_t>(seed);
  const auto hi = static_cast<std::uint32_t>(seed >> 32);
  for (int k = 0; k < K; ++k) {
    const auto kk = static_cast<std::uint32_t>(k);
    std::seed_seq arrival_seq{lo, hi, 0x41u, kk};
    std::seed_seq channel_seq{lo, hi, 0x43u, kk};
    arrivals.emplace_back(arrival_seq);
    channels.emplace_back(channel_seq);
  }
}

std::vector<double> SampleArrivals(const ArrivalModel& model,
                                   std::span<Engine> rngs) {
  std::vector<double> A(model.lambda.size());
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (model.lambda[k] <= 0.0) {
      A[k] = 0.0;
      continue;
    }
    std::poisson_distribution<std::int64_t> dist(model.lambda[k]);
    A[k] = std::min(static_cast<double>(dist(rngs[k])), model.A_max);
  }
  return A;
}

ChannelRealization SampleChannels(const ChannelModel& model,
                                  std::span<Engine> rngs) {
  ChannelRealization ch;
  ch.gamma.resize(model.d.size());
  ch.Gamma.resize(model.d.size());
  std::exponential_distribution<double> exp1(1.0);
  for (std::size_t k = 0; k < model.d.size(); ++k) {
    double g = exp1(rngs[k]);
    // Exp(1) can return exactly 0 from a zero uniform.
    while (!(g > 0.0)) g = exp1(rngs[k]);
    ch.gamma[k] = g;
    ch.Gamma[k] = g * model.g0 * std::pow(model.d0 / model.d[k], model.theta);
  }
  return ch;
}

RunMetrics Summarize(const SystemConfig& cfg, std::vector<SlotRecord> records,
                     double tail_fraction) {
  RunMetrics m;
  const int K = cfg.K;
  const auto T = static_cast<int>(records.size());
  m.avg_queue_per_server.assign(K, 0.0);
  if (T == 0) {
    m.records = std::move(records);
    return m;
  }
  m.tail_slots = std::clamp(
      static_cast<int>(std::ceil(tail_fraction * T)), 1, T);
  const int tail_start = T - m.tail_slots;
  double power = 0.0;
  double tail = 0.0;
  long long alternations = 0;
  for (int t = 0; t < T; ++t) {
    const SlotRecord& r = records[t];
    for (int k = 0; k < K; ++k) {
      power += cfg.w[k] * r.P[k];
      m.avg_queue_per_server[k] += r.Q_next[k];
      if (t >= tail_start) tail += r.Q_next[k];
    }
    if (!r.converged) ++m.nonconverged_slots;
    alternations += r.alternations;
    m.max_alternations = std::max(m.max_alternations, r.alternations);
  }
  m.avg_power = power / T;
  double sum_q = 0.0;
  for (double& q : m.avg_queue_per_server) {
    q /= T;
    sum_q += q;
  }
  m.avg_queue = sum_q / K;
  m.tail_avg_queue = tail / (static_cast<double>(m.tail_slots) * K);
  m.mean_alternations = static_cast<double>(alternations) / T;
  m.records = std::move(records);
  return m;
}

namespace {

void CheckRecord(const SystemConfig& cfg, const SlotRecord& r) {
  if (!r.action.IsFeasible(cfg)) {
    throw std::logic_error(fmt::format("infeasible action at slot {}", r.t));
  }
  for (int k = 0; k < cfg.K; ++k) {
    const double expected =
        std::max(r.Q[k] + r.A[k] - (r.D_l[k] + r.D_tx[k]), 0.0);
    if (r.Q_next[k] != expected || r.Q_next[k] < 0.0) {
      throw std::logic_error(
          fmt::format("queue update mismatch at slot {} server {}", r.t, k));
    }
    if (r.A[k] < 0.0 || r.A[k] > cfg.A_max) {
      throw std::logic_error(
          fmt::format("arrival out of range at slot {} server {}", r.t, k));
    }
  }
}

}  // namespace

RunMetrics Run(const SystemConfig& cfg, Policy policy,
               const SolverSettings& settings, const RunOptions& options) {
  cfg.Validate();
  settings.Validate();
  const int K = cfg.K;
  const ArrivalModel arrivals = MakeArrivalModel(cfg);
  const ChannelModel channels = MakeChannelModel(cfg);
  RandomStreams streams(cfg.seed, K);

  NetworkState state{0, std::vector<double>(K, 0.0)};
  std::vector<SlotRecord> records;
  records.reserve(cfg.horizon);
  std::vector<double> served(K);

  for (int t = 0; t < cfg.horizon; ++t) {
    ChannelRealization ch = SampleChannels(channels, streams.channels);
    SlotSolution sol = policy == Policy::kOptimal
                           ? SolveSlot(state.Q, ch.Gamma, cfg, settings)
                           : SolveSlotEven(state.Q, ch.Gamma, cfg, settings);

    SlotRecord r;
    r.t = state.t;
    r.Q = state.Q;
    r.gamma = std::move(ch.gamma);
    ServiceAndPower(cfg, sol.action, ch.Gamma, &r.D_l, &r.D_tx, &r.P);
    r.action = std::move(sol.action);
    r.objective = sol.objective;
    r.alternations = sol.alternations;
    r.converged = sol.converged;
    r.A = SampleArrivals(arrivals, streams.arrivals);
    for (int k = 0; k < K; ++k) served[k] = r.D_l[k] + r.D_tx[k];
    state = StepQueue(state, r.A, served);
    r.Q_next = state.Q;
    if (options.check_invariants) CheckRecord(cfg, r);
    records.push_back(std::move(r));
  }
  return Summarize(cfg, std::move(records), options.tail_fraction);
}

}  // namespace mecedge
