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

#include "mecedge/controller.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace mecedge {

void SolverSettings::Validate() const {
  if (!(alt_rel_tol > 0.0) || !(bisect_tol > 0.0) || !(dual_tol > 0.0)) {
    throw ConfigError("solver tolerances must be positive");
  }
  if (alt_max_iters < 1 || dual_max_iters < 1) {
    throw ConfigError("solver iteration caps must be >= 1");
  }
}

double OptimalFrequency(double Q, const SystemConfig& cfg, int k) {
  if (!(cfg.V > 0.0) || !(cfg.w[k] > 0.0)) {
    throw ConfigError("frequency closed form needs V > 0 and w_k > 0");
  }
  const double stationary = std::sqrt(
      cfg.tau * Q / (3.0 * cfg.L[k] * cfg.w[k] * cfg.kappa[k] * cfg.V));
  return std::min(cfg.f_max, stationary);
}

double OptimalTxPower(double Q, double a, double Gamma, const SystemConfig& cfg,
                      int k) {
  if (a < cfg.epsilon) {
    throw std::domain_error(
        fmt::format("bandwidth fraction {} below floor {}", a, cfg.epsilon));
  }
  if (!(Gamma > 0.0)) return 0.0;
  const double level = Q * cfg.tau / (cfg.V * cfg.w[k] * std::numbers::ln2);
  const double p = a * cfg.W * (level - cfg.N0 / Gamma);
  return std::clamp(p, 0.0, cfg.p_tx_max);
}

namespace {

// log2(1+x) - x / ((1+x) ln 2): the negated a-derivative of
// a log2(1 + c/a) with x = c/a. Positive and increasing in x.
double RateSlope(double x) {
  if (x < 1e-4) {
    return x * x * (0.5 - x * (2.0 / 3.0 - 0.75 * x)) / std::numbers::ln2;
  }
  return (std::log1p(x) - x / (1.0 + x)) / std::numbers::ln2;
}

bool Transmits(double Q, double p_tx, double Gamma) {
  return Q > 0.0 && p_tx > 0.0 && Gamma > 0.0;
}

}  // namespace

double BandwidthInner(double Q, double p_tx, double Gamma, double lambda,
                      const SystemConfig& cfg, const SolverSettings& settings) {
  if (!Transmits(Q, p_tx, Gamma)) return cfg.epsilon;
  const double c = Gamma * p_tx / (cfg.N0 * cfg.W);
  const double scale = Q * cfg.W * cfg.tau;
  // dh/da, increasing in a since h is convex.
  auto slope = [&](double a) { return lambda - scale * RateSlope(c / a); };

  double lo = cfg.epsilon;
  double hi = 1.0;
  if (slope(lo) >= 0.0) return lo;
  if (slope(hi) <= 0.0) return hi;
  while (hi - lo > settings.bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (slope(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BandwidthAllocation AllocateBandwidth(std::span<const double> Q,
                                      std::span<const double> p_tx,
                                      std::span<const double> Gamma,
                                      const SystemConfig& cfg,
                                      const SolverSettings& settings) {
  const int K = cfg.K;
  if (K * cfg.epsilon > 1.0) {
    throw ConfigError(fmt::format(
        "bandwidth floor infeasible: K * epsilon = {} > 1", K * cfg.epsilon));
  }
  BandwidthAllocation out;
  out.a.assign(K, cfg.epsilon);

  auto inner = [&](double lambda, std::vector<double>* a) {
    double sum = 0.0;
    for (int k = 0; k < K; ++k) {
      (*a)[k] = BandwidthInner(Q[k], p_tx[k], Gamma[k], lambda, cfg, settings);
      sum += (*a)[k];
    }
    return sum;
  };

  bool any_active = false;
  double lambda_hi = 0.0;
  for (int k = 0; k < K; ++k) {
    if (!Transmits(Q[k], p_tx[k], Gamma[k])) continue;
    any_active = true;
    // Multiplier at which a_k = 1 is stationary.
    const double c = Gamma[k] * p_tx[k] / (cfg.N0 * cfg.W);
    lambda_hi = std::max(lambda_hi, Q[k] * cfg.W * cfg.tau * RateSlope(c));
  }

  if (any_active) {
    std::vector<double> a_hi(K);
    double sum_hi = inner(0.0, &a_hi);
    if (sum_hi > 1.0) {
      std::vector<double> a_mid(K);
      double lambda_lo = 0.0;
      if (!(lambda_hi > 0.0)) lambda_hi = 1.0;
      while ((sum_hi = inner(lambda_hi, &a_hi)) > 1.0) {
        lambda_lo = lambda_hi;
        lambda_hi *= 2.0;
        if (!std::isfinite(lambda_hi)) {
          throw std::runtime_error("dual multiplier bracket diverged");
        }
      }
      out.converged = false;
      for (int it = 0; it < settings.dual_max_iters; ++it) {
        if (1.0 - sum_hi <= settings.dual_tol) {
          out.converged = true;
          break;
        }
        const double mid = 0.5 * (lambda_lo + lambda_hi);
        if (mid <= lambda_lo || mid >= lambda_hi) break;
        const double sum_mid = inner(mid, &a_mid);
        if (sum_mid > 1.0) {
          lambda_lo = mid;
        } else {
          lambda_hi = mid;
          sum_hi = sum_mid;
          a_hi.swap(a_mid);
        }
      }
      if (!out.converged) out.converged = 1.0 - sum_hi <= settings.dual_tol;
      out.lambda = lambda_hi;
    }
    out.a = std::move(a_hi);
  }

  // Leftover budget goes to transmitting servers (all servers when none
  // transmit), proportionally to their current share.
  double total = 0.0;
  double receiving = 0.0;
  for (int k = 0; k < K; ++k) {
    total += out.a[k];
    if (!any_active || Transmits(Q[k], p_tx[k], Gamma[k])) {
      receiving += out.a[k];
    }
  }
  const double surplus = 1.0 - total;
  if (surplus > 0.0 && receiving > 0.0) {
    for (int k = 0; k < K; ++k) {
      if (!any_active || Transmits(Q[k], p_tx[k], Gamma[k])) {
        out.a[k] += surplus * out.a[k] / receiving;
      }
    }
  }
  return out;
}

double EvaluateObjective(const PolicyAction& action, std::span<const double> Q,
                         std::span<const double> Gamma,
                         const SystemConfig& cfg) {
  double drift = 0.0;
  double penalty = 0.0;
  for (int k = 0; k < cfg.K; ++k) {
    const double served = LocalBits(action.f[k], cfg.L[k], cfg.tau) +
                          TxBits(action.a[k], action.p_tx[k], Gamma[k], cfg);
    drift -= Q[k] * served;
    penalty += cfg.w[k] *
               (LocalPower(action.f[k], cfg.kappa[k]) + action.p_tx[k]);
  }
  return drift + cfg.V * penalty;
}

SlotSolution SolveSlot(std::span<const double> Q,
                       std::span<const double> Gamma, const SystemConfig& cfg,
                       const SolverSettings& settings) {
  settings.Validate();
  const int K = cfg.K;
  if (static_cast<int>(Q.size()) != K || static_cast<int>(Gamma.size()) != K) {
    throw std::invalid_argument("backlog and gain vectors must have length K");
  }
  if (K * cfg.epsilon > 1.0) {
    throw ConfigError("bandwidth floor infeasible: K * epsilon > 1");
  }

  SlotSolution best;
  best.action = PolicyAction::Zero(K);
  for (int k = 0; k < K; ++k) {
    best.action.f[k] = OptimalFrequency(Q[k], cfg, k);
    best.action.p_tx[k] =
        OptimalTxPower(Q[k], best.action.a[k], Gamma[k], cfg, k);
  }
  best.objective = EvaluateObjective(best.action, Q, Gamma, cfg);
  best.alternations = 0;
  best.converged = false;

  PolicyAction candidate = best.action;
  for (int it = 1; it <= settings.alt_max_iters; ++it) {
    BandwidthAllocation alloc =
        AllocateBandwidth(Q, best.action.p_tx, Gamma, cfg, settings);
    candidate.a = std::move(alloc.a);
    for (int k = 0; k < K; ++k) {
      candidate.p_tx[k] =
          OptimalTxPower(Q[k], candidate.a[k], Gamma[k], cfg, k);
    }
    const double objective = EvaluateObjective(candidate, Q, Gamma, cfg);
    best.alternations = it;
    // A step that does not lower the objective means the iterate is
    // already optimal to working precision; keep the incumbent.
    if (!(objective <= best.objective)) {
      best.converged = true;
      break;
    }
    const double gain = best.objective - objective;
    best.action = candidate;
    best.objective = objective;
    best.dual_lambda = alloc.lambda;
    if (gain <= settings.alt_rel_tol * std::max(std::abs(objective), 1.0)) {
      best.converged = true;
      break;
    }
  }
  return best;
}

}  // namespace mecedge
