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

// Flat key = value configuration files.
//
// Keys carry their units. Per-server keys accept either one value (applied
// to every server) or a comma-separated list of K values. Lines starting
// with '#' are comments.
//
//   K = 7
//   tau_s = 0.5
//   W_Hz = 2e6
//   N0_dBm_per_Hz = -167
//   g0_dB = -40
//   theta = 4
//   d0_m = 1
//   d_m = 200
//   f_max_Hz = 2e9
//   p_tx_max_W = 5
//   kappa = 1e-26
//   L_cycles_per_bit = 3000
//   w = 0.142857142857       # defaults to 1/K
//   epsilon = 1e-3
//   V = 1e10
//   lambda_bits_per_slot = 4.37e5
//   A_max_bits = 8.74e5      # defaults to 2 * max lambda
//   horizon_slots = 5000
//   seed = 1

#ifndef MECEDGE_CONFIG_IO_H_
#define MECEDGE_CONFIG_IO_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mecedge/model.h"

namespace mecedge {

using KeyValues = std::map<std::string, std::string, std::less<>>;

// Parses `text` into ordered key/value pairs. Throws ConfigError on
// malformed lines or duplicate keys.
KeyValues ParseKeyValues(std::string_view text);

KeyValues ReadKeyValueFile(const std::filesystem::path& path);

// Names of all keys understood by ApplyConfigKeys.
const std::vector<std::string>& ConfigKeys();

// Overrides fields of `cfg` with the recognized keys in `kv` and converts
// dB quantities to linear. Keys listed in `ignore` are skipped; any other
// unknown key is an error.
void ApplyConfigKeys(const KeyValues& kv, SystemConfig* cfg,
                     const std::vector<std::string>& ignore = {});

// Defaults, then the file. Validates the result.
SystemConfig LoadConfig(const std::filesystem::path& path);
SystemConfig ParseConfig(std::string_view text);

// Config file text for `cfg`. N0 and g0 are written linear so that
// ParseConfig(FormatConfig(cfg)) reproduces cfg exactly.
std::string FormatConfig(const SystemConfig& cfg);

}  // namespace mecedge

#endif  // MECEDGE_CONFIG_IO_H_
