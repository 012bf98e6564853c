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

// Self-check suite behind the `verify` command.

#ifndef MECEDGE_VERIFY_H_
#define MECEDGE_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mecedge/controller.h"
#include "mecedge/model.h"
#include "mecedge/oracle.h"

namespace mecedge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int instances = 50;          // random K=2 oracle instances
  int dominance_instances = 1000;
  std::uint64_t seed = 2024;
  double oracle_rel_slack = 0.005;
  GridSpec grid;
  SolverSettings settings;
};

// `cfg` supplies the physical constants (K is overridden per check) and the
// simulated run for the drift-bound check.
std::vector<CheckResult> RunVerification(const SystemConfig& cfg,
                                         const VerifyOptions& options = {});

}  // namespace mecedge

#endif  // MECEDGE_VERIFY_H_
