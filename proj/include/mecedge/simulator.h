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

#ifndef MECEDGE_SIMULATOR_H_
#define MECEDGE_SIMULATOR_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "mecedge/controller.h"
#include "mecedge/model.h"

namespace mecedge {

enum class Policy { kOptimal, kEven };

std::string_view PolicyName(Policy policy);
// Accepts "optimal" or "even"; throws std::invalid_argument otherwise.
Policy ParsePolicy(std::string_view name);

// Poisson(lambda_k) arrivals truncated at A_max.
struct ArrivalModel {
  std::vector<double> lambda;
  double A_max = 0.0;
};

// Exp(1) small-scale fading over a fixed geometry.
struct ChannelModel {
  double g0 = 0.0;
  double theta = 0.0;
  double d0 = 0.0;
  std::vector<double> d;
};

ArrivalModel MakeArrivalModel(const SystemConfig& cfg);
ChannelModel MakeChannelModel(const SystemConfig& cfg);

using Engine = std::mt19937_64;

// One independent engine per server and per process, derived from the run
// seed. Arrival and channel streams never share state, so every policy run
// with the same seed sees the same arrivals and fading.
struct RandomStreams {
  std::vector<Engine> arrivals;
  std::vector<Engine> channels;

  RandomStreams(std::uint64_t seed, int K);
};

// Name of the Poisson sampler, echoed into run metadata.
inline constexpr std::string_view kPoissonAlgorithm =
    "std::poisson_distribution<int64_t> over mt19937_64";

std::vector<double> SampleArrivals(const ArrivalModel& model,
                                   std::span<Engine> rngs);
ChannelRealization SampleChannels(const ChannelModel& model,
                                  std::span<Engine> rngs);

struct RunOptions {
  double tail_fraction = 0.2;
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
};

struct RunMetrics {
  double avg_power = 0.0;                   // time average of sum_k w_k P_k
  std::vector<double> avg_queue_per_server;  // time average of Q_k(t), t=1..T
  double avg_queue = 0.0;                   // mean over servers of the above
  double tail_avg_queue = 0.0;              // same, final tail window only
  int tail_slots = 0;
  int nonconverged_slots = 0;
  double mean_alternations = 0.0;
  int max_alternations = 0;
  std::vector<SlotRecord> records;
};

// Averages over `records`; `tail_fraction` selects the final window.
RunMetrics Summarize(const SystemConfig& cfg, std::vector<SlotRecord> records,
                     double tail_fraction);

// Simulates cfg.horizon slots from Q(0) = 0. At slot t the policy sees Q(t)
// and the fading of slot t; arrivals A(t) enter only the queue update.
RunMetrics Run(const SystemConfig& cfg, Policy policy,
               const SolverSettings& settings = {},
               const RunOptions& options = {});

}  // namespace mecedge

#endif  // MECEDGE_SIMULATOR_H_
