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

#include "mecedge/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "mecedge/config_io.h"

#ifndef MECEDGE_VERSION
#define MECEDGE_VERSION "unknown"
#endif

namespace mecedge {

std::string_view AxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNone:
      return "none";
    case SweepAxis::kV:
      return "V";
    case SweepAxis::kLambda:
      return "lambda";
  }
  return "none";
}

SweepAxis ParseAxis(std::string_view name) {
  if (name == "none" || name.empty()) return SweepAxis::kNone;
  if (name == "V") return SweepAxis::kV;
  if (name == "lambda") return SweepAxis::kLambda;
  throw ConfigError(
      fmt::format("unknown sweep axis '{}' (expected V|lambda|none)", name));
}

void ExperimentPlan::Validate() const {
  base.Validate();
  settings.Validate();
  if (policies.empty()) throw ConfigError("plan needs at least one policy");
  if (seeds.empty()) throw ConfigError("plan needs at least one seed");
  if (axis != SweepAxis::kNone) {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    for (double v : values) {
      if (!(v > 0.0)) {
        throw ConfigError(fmt::format("sweep value {} is not positive", v));
      }
    }
  }
}

namespace {

std::vector<std::string> Split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

const std::vector<std::string> kPlanKeys = {
    "config", "sweep_axis", "sweep_values", "policies",
    "seeds",  "out_dir",    "trace",        "threads"};

}  // namespace

ExperimentPlan ParsePlan(std::string_view text,
                         const std::filesystem::path& base_dir) {
  const KeyValues kv = ParseKeyValues(text);
  ExperimentPlan plan;
  if (auto it = kv.find("config"); it != kv.end()) {
    std::filesystem::path p = it->second;
    if (p.is_relative()) p = base_dir / p;
    plan.base = LoadConfig(p);
  }
  ApplyConfigKeys(kv, &plan.base, kPlanKeys);

  if (auto it = kv.find("sweep_axis"); it != kv.end()) {
    plan.axis = ParseAxis(it->second);
  }
  if (auto it = kv.find("sweep_values"); it != kv.end()) {
    for (const auto& s : Split(it->second)) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) {
        throw ConfigError(fmt::format("sweep_values: '{}' is not a number", s));
      }
      plan.values.push_back(v);
    }
  }
  if (auto it = kv.find("policies"); it != kv.end()) {
    plan.policies.clear();
    for (const auto& s : Split(it->second)) {
      try {
        plan.policies.push_back(ParsePolicy(s));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (auto it = kv.find("seeds"); it != kv.end()) {
    plan.seeds.clear();
    for (const auto& s : Split(it->second)) {
      try {
        std::size_t used = 0;
        if (s.front() == '-') throw std::invalid_argument("sign");
        plan.seeds.push_back(std::stoull(s, &used));
        if (used != s.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ConfigError(fmt::format("seeds: '{}' is not an integer", s));
      }
    }
  }
  if (auto it = kv.find("out_dir"); it != kv.end()) {
    plan.out_dir = it->second;
    if (plan.out_dir.is_relative()) plan.out_dir = base_dir / plan.out_dir;
  }
  if (auto it = kv.find("trace"); it != kv.end()) {
    if (it->second == "true" || it->second == "1") {
      plan.trace = true;
    } else if (it->second == "false" || it->second == "0") {
      plan.trace = false;
    } else {
      throw ConfigError(fmt::format("trace: '{}' is not a boolean", it->second));
    }
  }
  if (auto it = kv.find("threads"); it != kv.end()) {
    try {
      plan.threads = std::stoi(it->second);
    } catch (const std::exception&) {
      throw ConfigError("threads: not an integer");
    }
  }
  plan.Validate();
  return plan;
}

ExperimentPlan LoadPlan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open '{}'", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return ParsePlan(buf.str(), path.parent_path());
}

SystemConfig PointConfig(const ExperimentPlan& plan, double value,
                         std::uint64_t seed) {
  SystemConfig cfg = plan.base;
  cfg.seed = seed;
  switch (plan.axis) {
    case SweepAxis::kV:
      cfg.V = value;
      break;
    case SweepAxis::kLambda:
      cfg.lambda.assign(cfg.K, value);
      break;
    case SweepAxis::kNone:
      break;
  }
  return cfg;
}

SummaryRow MakeSummaryRow(const SystemConfig& cfg, SweepAxis axis,
                          double value, Policy policy,
                          const RunMetrics& metrics) {
  SummaryRow row;
  row.axis = axis;
  row.sweep_value = value;
  row.policy = policy;
  row.seed = cfg.seed;
  row.V = cfg.V;
  row.lambda = std::accumulate(cfg.lambda.begin(), cfg.lambda.end(), 0.0) /
               cfg.K;
  row.K = cfg.K;
  row.slots = static_cast<int>(metrics.records.size());
  row.avg_power = metrics.avg_power;
  row.avg_queue = metrics.avg_queue;
  row.tail_avg_queue = metrics.tail_avg_queue;
  row.nonconverged_slots = metrics.nonconverged_slots;
  row.mean_alternations = metrics.mean_alternations;
  row.max_alternations = metrics.max_alternations;
  return row;
}

void WriteSummaryHeader(std::ostream& out) {
  out << "sweep_axis,sweep_value,policy,seed,V,lambda,K,slots,avg_power,"
         "avg_queue,tail_avg_queue,nonconverged_slots,mean_alternations,"
         "max_alternations\n";
}

void WriteSummaryRow(std::ostream& out, const SummaryRow& r) {
  fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
             AxisName(r.axis), r.sweep_value, PolicyName(r.policy), r.seed,
             r.V, r.lambda, r.K, r.slots, r.avg_power, r.avg_queue,
             r.tail_avg_queue, r.nonconverged_slots, r.mean_alternations,
             r.max_alternations);
}

void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  WriteSummaryHeader(out);
  for (const auto& r : rows) WriteSummaryRow(out, r);
}

void WriteTraceCsv(std::ostream& out, const std::vector<SlotRecord>& records) {
  out << "t,k,Q,A,f,p_tx,a,D_l,D_tx,P,objective\n";
  for (const auto& r : records) {
    for (std::size_t k = 0; k < r.Q.size(); ++k) {
      fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{}\n", r.t, k, r.Q[k],
                 r.A[k], r.action.f[k], r.action.p_tx[k], r.action.a[k],
                 r.D_l[k], r.D_tx[k], r.P[k], r.objective);
    }
  }
}

std::string FormatMetadata(const ExperimentPlan& plan) {
  std::string out;
  out += fmt::format("code_version = {}\n", MECEDGE_VERSION);
  out += "rng = mt19937_64, one stream per server for arrivals and for fading\n";
  out += fmt::format("poisson_sampler = {}\n", kPoissonAlgorithm);
  out += "fading = std::exponential_distribution<double>(1)\n";
  out += fmt::format("sweep_axis = {}\n", AxisName(plan.axis));
  out += fmt::format("sweep_values = {}\n", fmt::join(plan.values, ","));
  std::vector<std::string_view> names;
  for (Policy p : plan.policies) names.push_back(PolicyName(p));
  out += fmt::format("policies = {}\n", fmt::join(names, ","));
  out += fmt::format("seeds = {}\n", fmt::join(plan.seeds, ","));
  out += fmt::format("tail_fraction = {}\n", plan.run_options.tail_fraction);
  const SolverSettings& s = plan.settings;
  out += fmt::format(
      "solver = alt_max_iters:{} alt_rel_tol:{} bisect_tol:{} dual_tol:{} "
      "dual_max_iters:{}\n",
      s.alt_max_iters, s.alt_rel_tol, s.bisect_tol, s.dual_tol,
      s.dual_max_iters);
  out += "# base config\n";
  out += FormatConfig(plan.base);
  return out;
}

std::string TraceFileName(SweepAxis axis, std::size_t value_index,
                          Policy policy, std::uint64_t seed) {
  if (axis == SweepAxis::kNone) {
    return fmt::format("trace_{}_s{}.csv", PolicyName(policy), seed);
  }
  return fmt::format("trace_{}{}_{}_s{}.csv", AxisName(axis), value_index,
                     PolicyName(policy), seed);
}

std::vector<SummaryRow> RunExperiment(const ExperimentPlan& plan) {
  plan.Validate();
  struct Job {
    std::size_t value_index;
    double value;
    Policy policy;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  const std::vector<double> values =
      plan.axis == SweepAxis::kNone ? std::vector<double>{0.0} : plan.values;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (Policy p : plan.policies) {
      for (std::uint64_t s : plan.seeds) jobs.push_back({i, values[i], p, s});
    }
  }

  if (!plan.out_dir.empty()) std::filesystem::create_directories(plan.out_dir);

  std::vector<std::optional<SummaryRow>> rows(jobs.size());
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size() && !abort; j = next++) {
      const Job& job = jobs[j];
      try {
        const SystemConfig cfg = PointConfig(plan, job.value, job.seed);
        RunMetrics m = Run(cfg, job.policy, plan.settings, plan.run_options);
        if (plan.trace && !plan.out_dir.empty()) {
          std::ofstream trace(plan.out_dir / TraceFileName(plan.axis,
                                                          job.value_index,
                                                          job.policy, job.seed));
          WriteTraceCsv(trace, m.records);
        }
        rows[j] = MakeSummaryRow(cfg, plan.axis, job.value, job.policy, m);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        abort = true;
      }
    }
  };

  int threads = plan.threads > 0
                    ? plan.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<SummaryRow> done;
  for (auto& r : rows) {
    if (r) done.push_back(*r);
  }
  if (!plan.out_dir.empty()) {
    std::ofstream summary(plan.out_dir / "summary.csv");
    WriteSummaryCsv(summary, done);
    std::ofstream meta(plan.out_dir / "metadata.txt");
    meta << FormatMetadata(plan);
  }
  if (failure) std::rethrow_exception(failure);
  return done;
}

double LinearSlope(const std::vector<double>& ys) {
  const auto n = static_cast<double>(ys.size());
  if (ys.size() < 2) return 0.0;
  const double x_mean = (n - 1.0) / 2.0;
  const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double dx = static_cast<double>(i) - x_mean;
    sxy += dx * (ys[i] - y_mean);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::vector<double> MeanQueueTrace(const std::vector<SlotRecord>& records) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    out.push_back(std::accumulate(r.Q_next.begin(), r.Q_next.end(), 0.0) /
                  static_cast<double>(r.Q_next.size()));
  }
  return out;
}

}  // namespace mecedge
