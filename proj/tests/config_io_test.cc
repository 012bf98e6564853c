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

#include <cmath>

#include "doctest.h"
#include "mecedge/config_io.h"

namespace mecedge {
namespace {

TEST_CASE("empty file gives the reference configuration") {
  const SystemConfig cfg = ParseConfig("# nothing\n\n");
  const SystemConfig ref = SystemConfig::Default();
  CHECK(cfg.K == 7);
  CHECK(cfg.N0 == ref.N0);
  CHECK(cfg.A_max == 8.74e5);
  CHECK(cfg.w == std::vector<double>(7, 1.0 / 7));
}

TEST_CASE("dB quantities are converted at load") {
  const SystemConfig cfg = ParseConfig("N0_dBm_per_Hz = -167\ng0_dB = -40\n");
  CHECK(cfg.N0 == doctest::Approx(std::pow(10.0, -19.7)).epsilon(1e-12));
  CHECK(cfg.g0 == doctest::Approx(1e-4).epsilon(1e-12));
  const SystemConfig lin = ParseConfig("N0_W_per_Hz = 2e-20\ng0 = 1e-4\n");
  CHECK(lin.N0 == 2e-20);
  CHECK(lin.g0 == 1e-4);
  CHECK_THROWS_AS(ParseConfig("N0_W_per_Hz = 2e-20\nN0_dBm_per_Hz = -167\n"),
                  ConfigError);
}

TEST_CASE("per-server values broadcast or list") {
  const SystemConfig cfg = ParseConfig(
      "K = 3\n"
      "d_m = 100, 200, 300\n"
      "lambda_bits_per_slot = 1e5\n"
      "kappa = 2e-26\n");
  CHECK(cfg.d == std::vector<double>{100.0, 200.0, 300.0});
  CHECK(cfg.lambda == std::vector<double>(3, 1e5));
  CHECK(cfg.kappa == std::vector<double>(3, 2e-26));
  CHECK(cfg.L == std::vector<double>(3, 3000.0));
  CHECK(cfg.w == std::vector<double>(3, 1.0 / 3));
  CHECK(cfg.A_max == 2e5);
  CHECK_THROWS_AS(ParseConfig("K = 3\nd_m = 1,2\n"), ConfigError);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(ParseConfig("V 1e10\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig("V = ten\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig("V = 1e10x\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig("V = 1\nV = 2\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig("bandwidth = 2e6\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig("K = 2.5\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig("seed = -4\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig("epsilon = 0.2\n"), ConfigError);
  CHECK_THROWS_AS(LoadConfig("/nonexistent/mecedge.cfg"), ConfigError);
}

TEST_CASE("formatted config parses back to the same values") {
  SystemConfig cfg = ParseConfig(
      "K = 4\nd_m = 150,175,200,225\nw = 0.1,0.2,0.3,0.4\nV = 3.3e9\n"
      "seed = 18446744073709551615\nA_max_bits = 123456.5\n");
  const SystemConfig back = ParseConfig(FormatConfig(cfg));
  CHECK(back.K == cfg.K);
  CHECK(back.d == cfg.d);
  CHECK(back.w == cfg.w);
  CHECK(back.V == cfg.V);
  CHECK(back.N0 == cfg.N0);
  CHECK(back.g0 == cfg.g0);
  CHECK(back.seed == cfg.seed);
  CHECK(back.A_max == cfg.A_max);
  CHECK(back.lambda == cfg.lambda);
  CHECK(FormatConfig(back) == FormatConfig(cfg));
}

}  // namespace
}  // namespace mecedge
