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

#include "mecedge/oracle.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace mecedge {

void GridSpec::Validate() const {
  if (points_f < 2 || points_p < 2 || points_a < 2) {
    throw ConfigError("grid resolutions must be >= 2");
  }
  if (budget < 1) throw ConfigError("grid budget must be positive");
}

namespace {

std::vector<std::vector<double>> SimplexPoints(int K, double eps, int n) {
  std::vector<std::vector<double>> pts;
  if (K == 1) {
    pts.push_back({1.0});
    return pts;
  }
  const double top = 1.0 - (K - 1) * eps;
  auto axis = [&](int i) { return eps + (top - eps) * i / (n - 1); };
  if (K == 2) {
    for (int i = 0; i < n; ++i) {
      const double a1 = axis(i);
      pts.push_back({a1, 1.0 - a1});
    }
    return pts;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a1 = axis(i);
      const double a2 = axis(j);
      const double a3 = 1.0 - a1 - a2;
      if (a3 >= eps * (1.0 - 1e-12)) pts.push_back({a1, a2, std::max(a3, eps)});
    }
  }
  return pts;
}

std::int64_t SimplexCount(int K, int n) {
  if (K == 1) return 1;
  if (K == 2) return n;
  return static_cast<std::int64_t>(n) * n;  // upper bound
}

double Offloaded(double a, double p, double Gamma, const SystemConfig& cfg) {
  if (p == 0.0) return 0.0;
  return a * cfg.W * cfg.tau * std::log(1.0 + Gamma * p / (a * cfg.N0 * cfg.W)) /
         std::numbers::ln2;
}

}  // namespace

std::int64_t GridEvaluations(const GridSpec& grid, int K) {
  return static_cast<std::int64_t>(K) * grid.points_f +
         SimplexCount(K, grid.points_a) * K * grid.points_p;
}

SlotSolution GridSolveSlot(std::span<const double> Q,
                           std::span<const double> Gamma,
                           const SystemConfig& cfg, const GridSpec& grid) {
  grid.Validate();
  const int K = cfg.K;
  if (K > 3) {
    throw ConfigError(fmt::format("grid oracle supports K <= 3 (got {})", K));
  }
  if (GridEvaluations(grid, K) > grid.budget) {
    throw ConfigError(fmt::format("grid needs {} evaluations, budget is {}",
                                  GridEvaluations(grid, K), grid.budget));
  }

  SlotSolution best;
  best.action.f.assign(K, 0.0);
  best.action.p_tx.assign(K, 0.0);
  best.action.a.assign(K, 1.0 / K);
  double f_part = 0.0;
  for (int k = 0; k < K; ++k) {
    double best_term = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.points_f; ++i) {
      const double f = cfg.f_max * i / (grid.points_f - 1);
      const double term = -Q[k] * cfg.tau * f / cfg.L[k] +
                          cfg.V * cfg.w[k] * cfg.kappa[k] * f * f * f;
      if (term < best_term) {
        best_term = term;
        best.action.f[k] = f;
      }
    }
    f_part += best_term;
  }

  double best_tx = std::numeric_limits<double>::infinity();
  std::vector<double> p_here(K);
  for (const auto& a : SimplexPoints(K, cfg.epsilon, grid.points_a)) {
    double tx_part = 0.0;
    for (int k = 0; k < K; ++k) {
      double best_term = std::numeric_limits<double>::infinity();
      for (int j = 0; j < grid.points_p; ++j) {
        const double p = cfg.p_tx_max * j / (grid.points_p - 1);
        const double term =
            -Q[k] * Offloaded(a[k], p, Gamma[k], cfg) + cfg.V * cfg.w[k] * p;
        if (term < best_term) {
          best_term = term;
          p_here[k] = p;
        }
      }
      tx_part += best_term;
    }
    if (tx_part < best_tx) {
      best_tx = tx_part;
      best.action.a = a;
      best.action.p_tx = p_here;
    }
  }
  best.objective = f_part + best_tx;
  return best;
}

LemmaCheck CheckLemma1(const SlotRecord& r, const SystemConfig& cfg) {
  LemmaCheck out;
  double constant = 0.0;
  double constant_ln2 = 0.0;
  double arrivals_term = 0.0;
  for (int k = 0; k < cfg.K; ++k) {
    out.delta_L += 0.5 * (r.Q_next[k] * r.Q_next[k] - r.Q[k] * r.Q[k]);
    out.weighted_service += r.Q[k] * (r.D_l[k] + r.D_tx[k]);
    arrivals_term += r.Q[k] * r.A[k];
    const double local_max = cfg.tau * cfg.f_max / cfg.L[k];
    const double gain =
        r.gamma[k] * cfg.g0 * std::pow(cfg.d0 / cfg.d[k], cfg.theta);
    const double tx_max = cfg.tau / cfg.N0 * cfg.p_tx_max * gain;
    const double a2 = cfg.A_max * cfg.A_max;
    const double s = local_max + tx_max;
    const double s_ln2 = local_max + tx_max / std::numbers::ln2;
    constant += 0.5 * std::max(a2, s * s);
    constant_ln2 += 0.5 * std::max(a2, s_ln2 * s_ln2);
  }
  out.C_printed = constant + arrivals_term;
  out.C_ln2 = constant_ln2 + arrivals_term;
  out.slack_printed = -out.weighted_service + out.C_printed - out.delta_L;
  out.slack_ln2 = -out.weighted_service + out.C_ln2 - out.delta_L;
  return out;
}

}  // namespace mecedge
