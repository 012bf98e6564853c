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

// Per-slot drift-plus-penalty controller.
//
// Each slot minimizes
//
//   -sum_k Q_k (D_l,k + D_tx,k) + V sum_k w_k P_k
//
// over (f, p_tx, a) subject to box constraints on f and p_tx, a_k >= epsilon
// and sum_k a_k <= 1. The frequency part separates per server and has a
// closed form. The (p_tx, a) part is solved by alternating the closed-form
// transmit power at fixed a with a dual-decomposition bandwidth split at
// fixed p_tx, starting from the uniform split.

#ifndef MECEDGE_CONTROLLER_H_
#define MECEDGE_CONTROLLER_H_

#include <span>
#include <vector>

#include "mecedge/model.h"

namespace mecedge {

struct SolverSettings {
  int alt_max_iters = 50;
  double alt_rel_tol = 1e-9;
  double bisect_tol = 1e-12;  // absolute, on bandwidth fractions
  double dual_tol = 1e-9;     // on |sum_k a_k - 1|
  int dual_max_iters = 200;

  void Validate() const;
};

struct SlotSolution {
  PolicyAction action;
  double objective = 0.0;
  bool converged = true;
  double dual_lambda = 0.0;
  int alternations = 0;
};

// Closed-form minimizer of -(tau Q / L) f + V w kappa f^3 on [0, f_max].
// Throws ConfigError if V <= 0 or w_k <= 0.
double OptimalFrequency(double Q, const SystemConfig& cfg, int k);

// Water-filling transmit power for server k at a fixed bandwidth fraction.
// Throws std::domain_error if a < epsilon.
double OptimalTxPower(double Q, double a, double Gamma, const SystemConfig& cfg,
                      int k);

// Minimizer over a in [epsilon, 1] of
//   -Q a W tau log2(1 + Gamma p / (N0 W a)) + lambda a.
// Returns epsilon when Q == 0 or p == 0.
double BandwidthInner(double Q, double p_tx, double Gamma, double lambda,
                      const SystemConfig& cfg, const SolverSettings& settings);

struct BandwidthAllocation {
  std::vector<double> a;
  double lambda = 0.0;
  bool converged = true;
};

// Splits the band at fixed transmit powers by searching the multiplier of
// the budget constraint. Any budget left over once the dual search settles
// is handed to the servers that transmit, proportionally to their share.
BandwidthAllocation AllocateBandwidth(std::span<const double> Q,
                                      std::span<const double> p_tx,
                                      std::span<const double> Gamma,
                                      const SystemConfig& cfg,
                                      const SolverSettings& settings);

// Per-slot objective (the C_lp-free drift-plus-penalty bound).
double EvaluateObjective(const PolicyAction& action, std::span<const double> Q,
                         std::span<const double> Gamma,
                         const SystemConfig& cfg);

SlotSolution SolveSlot(std::span<const double> Q,
                       std::span<const double> Gamma, const SystemConfig& cfg,
                       const SolverSettings& settings = {});

}  // namespace mecedge

#endif  // MECEDGE_CONTROLLER_H_
