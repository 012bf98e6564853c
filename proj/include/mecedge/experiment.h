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

// Experiment plans, sweeps and CSV output.

#ifndef MECEDGE_EXPERIMENT_H_
#define MECEDGE_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mecedge/controller.h"
#include "mecedge/model.h"
#include "mecedge/simulator.h"

namespace mecedge {

enum class SweepAxis { kNone, kV, kLambda };

std::string_view AxisName(SweepAxis axis);
SweepAxis ParseAxis(std::string_view name);

struct ExperimentPlan {
  SystemConfig base = SystemConfig::Default();
  SweepAxis axis = SweepAxis::kNone;
  std::vector<double> values;  // ignored when axis == kNone
  std::vector<Policy> policies = {Policy::kOptimal, Policy::kEven};
  std::vector<std::uint64_t> seeds = {1};
  std::filesystem::path out_dir;  // empty: nothing written
  bool trace = false;
  int threads = 0;  // 0: hardware concurrency
  SolverSettings settings;
  RunOptions run_options;

  void Validate() const;
};

// Plan files use the same key = value syntax as configs. Recognized keys:
//   config = base.cfg          (relative to the plan file)
//   sweep_axis = V | lambda | none
//   sweep_values = 1e8,1e9,1e10
//   policies = optimal,even
//   seeds = 1,2,3
//   out_dir = results
//   trace = true | false
//   threads = 4
// Every configuration key is also accepted and overrides the base config.
ExperimentPlan ParsePlan(std::string_view text,
                         const std::filesystem::path& base_dir = {});
ExperimentPlan LoadPlan(const std::filesystem::path& path);

struct SummaryRow {
  SweepAxis axis = SweepAxis::kNone;
  double sweep_value = 0.0;
  Policy policy = Policy::kOptimal;
  std::uint64_t seed = 0;
  double V = 0.0;
  double lambda = 0.0;  // mean over servers
  int K = 0;
  int slots = 0;
  double avg_power = 0.0;
  double avg_queue = 0.0;
  double tail_avg_queue = 0.0;
  int nonconverged_slots = 0;
  double mean_alternations = 0.0;
  int max_alternations = 0;
};

// The configuration a plan uses at one sweep point and seed.
SystemConfig PointConfig(const ExperimentPlan& plan, double value,
                         std::uint64_t seed);

SummaryRow MakeSummaryRow(const SystemConfig& cfg, SweepAxis axis,
                          double value, Policy policy,
                          const RunMetrics& metrics);

void WriteSummaryHeader(std::ostream& out);
void WriteSummaryRow(std::ostream& out, const SummaryRow& row);
void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows);

// Columns: t,k,Q,A,f,p_tx,a,D_l,D_tx,P,objective. One line per (slot,
// server); Q is the backlog at the start of the slot and objective is the
// slot-level value, repeated on each server line.
void WriteTraceCsv(std::ostream& out, const std::vector<SlotRecord>& records);

// Sidecar metadata: code version, RNG and sampler names, the plan and the
// base config echo.
std::string FormatMetadata(const ExperimentPlan& plan);

std::string TraceFileName(SweepAxis axis, std::size_t value_index,
                          Policy policy, std::uint64_t seed);

// Runs every (value, policy, seed) point, in parallel when threads > 1.
// Rows come back in plan order: values outermost, then policies, then
// seeds. With out_dir set, writes summary.csv, metadata.txt and, if
// requested, one trace per run. If a run throws, the rows that finished are
// still written before the exception propagates.
std::vector<SummaryRow> RunExperiment(const ExperimentPlan& plan);

// Least-squares slope of ys against their indices.
double LinearSlope(const std::vector<double>& ys);

// Across-server mean of Q(t+1) per slot.
std::vector<double> MeanQueueTrace(const std::vector<SlotRecord>& records);

}  // namespace mecedge

#endif  // MECEDGE_EXPERIMENT_H_
