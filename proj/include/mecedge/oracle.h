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

// Brute-force and analytic cross-checks for the controller and the
// simulator. Nothing here calls into the controller.

#ifndef MECEDGE_ORACLE_H_
#define MECEDGE_ORACLE_H_

#include <cstdint>
#include <span>

#include "mecedge/controller.h"
#include "mecedge/model.h"

namespace mecedge {

struct GridSpec {
  int points_f = 64;
  int points_p = 64;
  int points_a = 49;  // per free simplex coordinate, on [eps, 1 - (K-1) eps]
  std::int64_t budget = 100'000'000;

  void Validate() const;
};

// Number of objective-term evaluations GridSolveSlot performs for K servers.
// The objective separates into a frequency part per server and a
// (power, bandwidth) part per server, so the minimum over the full Cartesian
// grid is found exactly by minimizing each part over its own axis.
std::int64_t GridEvaluations(const GridSpec& grid, int K);

// Minimum of the per-slot objective over f on a uniform grid of [0, f_max],
// p_tx on a uniform grid of [0, p_tx_max] and a on a uniform grid of the
// simplex sum(a) = 1, a >= eps. Only K <= 3 is accepted.
SlotSolution GridSolveSlot(std::span<const double> Q,
                           std::span<const double> Gamma,
                           const SystemConfig& cfg, const GridSpec& grid = {});

// Both readings of the per-slot drift bound. The printed cap on offloaded
// bits is tau p_max Gamma_k / N0; the ln2 variant divides it by ln 2, which
// is what log2(1+x) <= x / ln2 actually gives.
struct LemmaCheck {
  double delta_L = 0.0;  // 0.5 * sum(Q'^2 - Q^2)
  double weighted_service = 0.0;  // sum Q_k (D_l,k + D_tx,k)
  double C_printed = 0.0;
  double C_ln2 = 0.0;
  double slack_printed = 0.0;  // -weighted_service + C_printed - delta_L
  double slack_ln2 = 0.0;
};

LemmaCheck CheckLemma1(const SlotRecord& record, const SystemConfig& cfg);

}  // namespace mecedge

#endif  // MECEDGE_ORACLE_H_
