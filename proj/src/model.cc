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

#include "mecedge/model.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace mecedge {

double DbmToWatts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

SystemConfig SystemConfig::Default() {
  SystemConfig cfg;
  cfg.K = 7;
  cfg.tau = 0.5;
  cfg.W = 2e6;
  cfg.N0 = DbmToWatts(-167.0);
  cfg.g0 = DbToLinear(-40.0);
  cfg.theta = 4.0;
  cfg.d0 = 1.0;
  cfg.d.assign(cfg.K, 200.0);
  cfg.f_max = 2e9;
  cfg.p_tx_max = 5.0;
  cfg.kappa.assign(cfg.K, 1e-26);
  cfg.L.assign(cfg.K, 3000.0);
  cfg.w.assign(cfg.K, 1.0 / cfg.K);
  cfg.epsilon = 1e-3;
  cfg.V = 1e10;
  cfg.lambda.assign(cfg.K, 4.37e5);
  cfg.A_max = 2.0 * 4.37e5;
  cfg.horizon = 5000;
  cfg.seed = 1;
  return cfg;
}

namespace {

void RequirePositive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(fmt::format("{} must be positive and finite (got {})",
                                  name, v));
  }
}

void RequireLength(const std::vector<double>& v, int K, const char* name) {
  if (static_cast<int>(v.size()) != K) {
    throw ConfigError(
        fmt::format("{} has {} entries, expected K={}", name, v.size(), K));
  }
}

}  // namespace

std::vector<std::string> SystemConfig::Validate() const {
  if (K < 1) throw ConfigError(fmt::format("K must be >= 1 (got {})", K));
  RequirePositive(tau, "tau");
  RequirePositive(W, "W");
  RequirePositive(N0, "N0");
  RequirePositive(g0, "g0");
  RequirePositive(theta, "theta");
  RequirePositive(d0, "d0");
  RequirePositive(f_max, "f_max");
  RequirePositive(p_tx_max, "p_tx_max");
  RequirePositive(V, "V");
  RequireLength(d, K, "d");
  RequireLength(kappa, K, "kappa");
  RequireLength(L, K, "L");
  RequireLength(w, K, "w");
  RequireLength(lambda, K, "lambda");
  for (int k = 0; k < K; ++k) {
    RequirePositive(d[k], "d_k");
    RequirePositive(kappa[k], "kappa_k");
    RequirePositive(L[k], "L_k");
    RequirePositive(w[k], "w_k");
    if (!(lambda[k] >= 0.0) || !std::isfinite(lambda[k])) {
      throw ConfigError("lambda_k must be non-negative and finite");
    }
  }
  if (!(epsilon > 0.0) || K * epsilon >= 1.0) {
    throw ConfigError(fmt::format(
        "epsilon must lie in (0, 1/K); got epsilon={} with K={}", epsilon, K));
  }
  if (!(A_max >= 0.0) || !std::isfinite(A_max)) {
    throw ConfigError("A_max must be non-negative and finite");
  }
  if (horizon < 0) throw ConfigError("horizon must be non-negative");

  std::vector<std::string> warnings;
  const double lambda_max = *std::max_element(lambda.begin(), lambda.end());
  if (A_max < lambda_max) {
    warnings.push_back(fmt::format(
        "A_max={} is below max lambda={}; truncation biases the arrival mean",
        A_max, lambda_max));
  }
  return warnings;
}

double CompositeGain(const SystemConfig& cfg, int k, double gamma) {
  return gamma * cfg.g0 * std::pow(cfg.d0 / cfg.d[k], cfg.theta);
}

ChannelRealization MakeChannel(const SystemConfig& cfg,
                               std::vector<double> gamma) {
  ChannelRealization ch;
  ch.Gamma.resize(gamma.size());
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    ch.Gamma[k] = CompositeGain(cfg, static_cast<int>(k), gamma[k]);
  }
  ch.gamma = std::move(gamma);
  return ch;
}

PolicyAction PolicyAction::Zero(int K) {
  PolicyAction action;
  action.f.assign(K, 0.0);
  action.p_tx.assign(K, 0.0);
  action.a.assign(K, 1.0 / K);
  return action;
}

bool PolicyAction::IsFeasible(const SystemConfig& cfg, double slack) const {
  const auto K = static_cast<std::size_t>(cfg.K);
  if (f.size() != K || p_tx.size() != K || a.size() != K) return false;
  double sum = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    if (!(f[k] >= 0.0 && f[k] <= cfg.f_max)) return false;
    if (!(p_tx[k] >= 0.0 && p_tx[k] <= cfg.p_tx_max)) return false;
    if (!(a[k] >= cfg.epsilon)) return false;
    sum += a[k];
  }
  return sum <= 1.0 + slack;
}

double LocalBits(double f, double L, double tau) { return tau * f / L; }

double LocalPower(double f, double kappa) { return kappa * f * f * f; }

double TxBits(double a, double p_tx, double Gamma, const SystemConfig& cfg) {
  if (!(a > 0.0)) {
    throw std::domain_error(
        fmt::format("bandwidth fraction must be positive (got {})", a));
  }
  if (p_tx == 0.0) return 0.0;
  const double snr = Gamma * p_tx / (a * cfg.N0 * cfg.W);
  return a * cfg.W * cfg.tau * std::log2(1.0 + snr);
}

void ServiceAndPower(const SystemConfig& cfg, const PolicyAction& action,
                     std::span<const double> Gamma, std::vector<double>* D_l,
                     std::vector<double>* D_tx, std::vector<double>* P) {
  const int K = cfg.K;
  D_l->resize(K);
  D_tx->resize(K);
  P->resize(K);
  for (int k = 0; k < K; ++k) {
    (*D_l)[k] = LocalBits(action.f[k], cfg.L[k], cfg.tau);
    (*D_tx)[k] = TxBits(action.a[k], action.p_tx[k], Gamma[k], cfg);
    (*P)[k] = LocalPower(action.f[k], cfg.kappa[k]) + action.p_tx[k];
  }
}

NetworkState StepQueue(const NetworkState& state, std::span<const double> A,
                       std::span<const double> served) {
  NetworkState next;
  next.t = state.t + 1;
  next.Q.resize(state.Q.size());
  for (std::size_t k = 0; k < state.Q.size(); ++k) {
    next.Q[k] = std::max(state.Q[k] + A[k] - served[k], 0.0);
  }
  return next;
}

}  // namespace mecedge
