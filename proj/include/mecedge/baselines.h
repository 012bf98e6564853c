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

#ifndef MECEDGE_BASELINES_H_
#define MECEDGE_BASELINES_H_

#include <span>

#include "mecedge/controller.h"

namespace mecedge {

// Comparison policy: fixed uniform split a_k = 1/K, with frequency and
// transmit power still set by their closed forms.
SlotSolution SolveSlotEven(std::span<const double> Q,
                           std::span<const double> Gamma,
                           const SystemConfig& cfg,
                           const SolverSettings& settings = {});

}  // namespace mecedge

#endif  // MECEDGE_BASELINES_H_
