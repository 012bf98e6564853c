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

#include "mecedge/config_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace mecedge {

namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double ParseDouble(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", key, value));
  }
  return out;
}

std::vector<double> ParseList(const std::string& key,
                              const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseDouble(key, Trim(item)));
  if (out.empty()) throw ConfigError(fmt::format("{}: empty list", key));
  return out;
}

std::vector<double> Broadcast(const std::string& key, std::vector<double> v,
                              int K) {
  if (v.size() == 1) return std::vector<double>(K, v[0]);
  if (static_cast<int>(v.size()) != K) {
    throw ConfigError(
        fmt::format("{}: {} values given, K={}", key, v.size(), K));
  }
  return v;
}

int ParseInt(const std::string& key, const std::string& value) {
  const double v = ParseDouble(key, value);
  if (v != std::floor(v) || std::abs(v) > 2e9) {
    throw ConfigError(fmt::format("{}: '{}' is not an integer", key, value));
  }
  return static_cast<int>(v);
}

}  // namespace

KeyValues ParseKeyValues(std::string_view text) {
  KeyValues kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("line {}: expected key = value", lineno));
    }
    std::string key = Trim(std::string_view(trimmed).substr(0, eq));
    std::string value = Trim(std::string_view(trimmed).substr(eq + 1));
    if (key.empty()) throw ConfigError(fmt::format("line {}: empty key", lineno));
    if (!kv.emplace(key, value).second) {
      throw ConfigError(fmt::format("line {}: duplicate key '{}'", lineno, key));
    }
  }
  return kv;
}

KeyValues ReadKeyValueFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open '{}'", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseKeyValues(buf.str());
}

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> keys = {
      "K",        "tau_s",        "W_Hz",
      "N0_dBm_per_Hz", "N0_W_per_Hz", "g0_dB",
      "g0",       "theta",        "d0_m",
      "d_m",      "f_max_Hz",     "p_tx_max_W",
      "kappa",    "L_cycles_per_bit", "w",
      "epsilon",  "V",            "lambda_bits_per_slot",
      "A_max_bits", "horizon_slots", "seed"};
  return keys;
}

void ApplyConfigKeys(const KeyValues& kv, SystemConfig* cfg,
                     const std::vector<std::string>& ignore) {
  const auto& known = ConfigKeys();
  for (const auto& [key, value] : kv) {
    if (std::find(ignore.begin(), ignore.end(), key) != ignore.end()) continue;
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(fmt::format("unknown configuration key '{}'", key));
    }
  }
  if (kv.contains("N0_dBm_per_Hz") && kv.contains("N0_W_per_Hz")) {
    throw ConfigError("give N0 either in dBm/Hz or in W/Hz, not both");
  }
  if (kv.contains("g0_dB") && kv.contains("g0")) {
    throw ConfigError("give g0 either in dB or linear, not both");
  }

  auto get = [&](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  const int old_K = cfg->K;
  if (auto* v = get("K")) cfg->K = ParseInt("K", *v);
  if (cfg->K < 1) throw ConfigError("K must be >= 1");
  const int K = cfg->K;

  if (auto* v = get("tau_s")) cfg->tau = ParseDouble("tau_s", *v);
  if (auto* v = get("W_Hz")) cfg->W = ParseDouble("W_Hz", *v);
  if (auto* v = get("N0_dBm_per_Hz")) {
    cfg->N0 = DbmToWatts(ParseDouble("N0_dBm_per_Hz", *v));
  }
  if (auto* v = get("N0_W_per_Hz")) cfg->N0 = ParseDouble("N0_W_per_Hz", *v);
  if (auto* v = get("g0_dB")) cfg->g0 = DbToLinear(ParseDouble("g0_dB", *v));
  if (auto* v = get("g0")) cfg->g0 = ParseDouble("g0", *v);
  if (auto* v = get("theta")) cfg->theta = ParseDouble("theta", *v);
  if (auto* v = get("d0_m")) cfg->d0 = ParseDouble("d0_m", *v);
  if (auto* v = get("f_max_Hz")) cfg->f_max = ParseDouble("f_max_Hz", *v);
  if (auto* v = get("p_tx_max_W")) {
    cfg->p_tx_max = ParseDouble("p_tx_max_W", *v);
  }
  if (auto* v = get("epsilon")) cfg->epsilon = ParseDouble("epsilon", *v);
  if (auto* v = get("V")) cfg->V = ParseDouble("V", *v);
  if (auto* v = get("horizon_slots")) {
    cfg->horizon = ParseInt("horizon_slots", *v);
  }
  if (auto* v = get("seed")) {
    try {
      std::size_t used = 0;
      if (v->empty() || v->front() == '-') throw std::invalid_argument("sign");
      cfg->seed = std::stoull(*v, &used);
      if (used != v->size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError(fmt::format("seed: '{}' is not an unsigned integer", *v));
    }
  }

  // Per-server vectors: explicit values win; otherwise a K change
  // re-broadcasts the first entry of the previous vector.
  auto per_server = [&](const char* key, std::vector<double>* field) {
    if (auto* v = get(key)) {
      *field = Broadcast(key, ParseList(key, *v), K);
    } else if (static_cast<int>(field->size()) != K) {
      if (field->empty()) {
        throw ConfigError(fmt::format("{} must be given", key));
      }
      *field = std::vector<double>(K, field->front());
    }
  };
  per_server("d_m", &cfg->d);
  per_server("kappa", &cfg->kappa);
  per_server("L_cycles_per_bit", &cfg->L);
  per_server("lambda_bits_per_slot", &cfg->lambda);
  if (auto* v = get("w")) {
    cfg->w = Broadcast("w", ParseList("w", *v), K);
  } else if (K != old_K || static_cast<int>(cfg->w.size()) != K) {
    cfg->w.assign(K, 1.0 / K);
  }
  if (auto* v = get("A_max_bits")) {
    cfg->A_max = ParseDouble("A_max_bits", *v);
  } else if (kv.contains("lambda_bits_per_slot")) {
    cfg->A_max = 2.0 * *std::max_element(cfg->lambda.begin(), cfg->lambda.end());
  }
}

SystemConfig ParseConfig(std::string_view text) {
  SystemConfig cfg = SystemConfig::Default();
  ApplyConfigKeys(ParseKeyValues(text), &cfg);
  cfg.Validate();
  return cfg;
}

SystemConfig LoadConfig(const std::filesystem::path& path) {
  SystemConfig cfg = SystemConfig::Default();
  ApplyConfigKeys(ReadKeyValueFile(path), &cfg);
  cfg.Validate();
  return cfg;
}

std::string FormatConfig(const SystemConfig& cfg) {
  auto list = [](const std::vector<double>& v) {
    return fmt::format("{}", fmt::join(v, ","));
  };
  std::string out;
  out += fmt::format("K = {}\n", cfg.K);
  out += fmt::format("tau_s = {}\n", cfg.tau);
  out += fmt::format("W_Hz = {}\n", cfg.W);
  out += fmt::format("N0_W_per_Hz = {}\n", cfg.N0);
  out += fmt::format("g0 = {}\n", cfg.g0);
  out += fmt::format("theta = {}\n", cfg.theta);
  out += fmt::format("d0_m = {}\n", cfg.d0);
  out += fmt::format("d_m = {}\n", list(cfg.d));
  out += fmt::format("f_max_Hz = {}\n", cfg.f_max);
  out += fmt::format("p_tx_max_W = {}\n", cfg.p_tx_max);
  out += fmt::format("kappa = {}\n", list(cfg.kappa));
  out += fmt::format("L_cycles_per_bit = {}\n", list(cfg.L));
  out += fmt::format("w = {}\n", list(cfg.w));
  out += fmt::format("epsilon = {}\n", cfg.epsilon);
  out += fmt::format("V = {}\n", cfg.V);
  out += fmt::format("lambda_bits_per_slot = {}\n", list(cfg.lambda));
  out += fmt::format("A_max_bits = {}\n", cfg.A_max);
  out += fmt::format("horizon_slots = {}\n", cfg.horizon);
  out += fmt::format("seed = {}\n", cfg.seed);
  return out;
}

}  // namespace mecedge
