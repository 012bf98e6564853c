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

#ifndef MECEDGE_MODEL_H_
#define MECEDGE_MODEL_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mecedge {

// Raised for parameter sets the model or the solvers cannot operate on.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Static parameters of the edge network. All quantities are linear SI:
// dB and dBm inputs are converted when the configuration is loaded.
struct SystemConfig {
  int K = 7;                    // number of edge servers
  double tau = 0.5;             // slot length, s
  double W = 2e6;               // total bandwidth, Hz
  double N0 = 0.0;              // noise PSD, W/Hz
  double g0 = 1e-4;             // path-loss constant
  double theta = 4.0;           // path-loss exponent
  double d0 = 1.0;              // reference distance, m
  std::vector<double> d;        // server-to-cloud distance, m
  double f_max = 2e9;           // cycles/s
  double p_tx_max = 5.0;        // W
  std::vector<double> kappa;    // effective switched capacitance
  std::vector<double> L;        // cycles per bit
  std::vector<double> w;        // power weights
  double epsilon = 1e-3;        // bandwidth-fraction floor
  double V = 1e10;              // drift/penalty trade-off
  std::vector<double> lambda;   // mean arrivals, bits/slot
  double A_max = 0.0;           // arrival truncation, bits/slot
  int horizon = 5000;           // slots
  std::uint64_t seed = 1;

  // Reference parameter set: K=7 servers at 200 m, lambda = 4.37e5 bits/slot.
  static SystemConfig Default();

  // Throws ConfigError on the first violated invariant. Returns warnings
  // for suspicious but legal settings (e.g. A_max below some lambda_k).
  std::vector<std::string> Validate() const;
};

double DbmToWatts(double dbm);
double DbToLinear(double db);

// Queue backlogs at a slot boundary.
struct NetworkState {
  std::int64_t t = 0;
  std::vector<double> Q;
};

struct ChannelRealization {
  std::vector<double> gamma;  // small-scale power gain
  std::vector<double> Gamma;  // composite power gain
};

// Composite gain gamma * g0 * (d0/d_k)^theta.
double CompositeGain(const SystemConfig& cfg, int k, double gamma);
ChannelRealization MakeChannel(const SystemConfig& cfg,
                               std::vector<double> gamma);

// Decision for one slot: frequency, transmit power and bandwidth fraction
// per server.
struct PolicyAction {
  std::vector<double> f;
  std::vector<double> p_tx;
  std::vector<double> a;

  static PolicyAction Zero(int K);
  // Box, floor and budget constraints; `slack` absorbs rounding in sum(a).
  bool IsFeasible(const SystemConfig& cfg, double slack = 1e-9) const;
};

struct SlotRecord {
  std::int64_t t = 0;
  std::vector<double> Q;       // backlog at the start of the slot
  std::vector<double> gamma;
  PolicyAction action;
  std::vector<double> A;
  std::vector<double> D_l;
  std::vector<double> D_tx;
  std::vector<double> P;
  std::vector<double> Q_next;
  double objective = 0.0;
  int alternations = 0;
  bool converged = true;
};

// Bits processed locally in one slot.
double LocalBits(double f, double L, double tau);

// Processor power, W.
double LocalPower(double f, double kappa);

// Bits offloaded in one slot over an FDMA share `a` of the band. Zero power
// yields exactly zero. Throws std::domain_error when a <= 0.
double TxBits(double a, double p_tx, double Gamma, const SystemConfig& cfg);

// Per-server local bits, offloaded bits and total power of `action`.
void ServiceAndPower(const SystemConfig& cfg, const PolicyAction& action,
                     std::span<const double> Gamma, std::vector<double>* D_l,
                     std::vector<double>* D_tx, std::vector<double>* P);

// Q' = max(Q + A - served, 0) componentwise; t advances by one.
NetworkState StepQueue(const NetworkState& state, std::span<const double> A,
                       std::span<const double> served);

}  // namespace mecedge

#endif  // MECEDGE_MODEL_H_
