// Copyright 2026 The Tetherpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run configuration shared by every command-line command.
//
// The file is a JSON object with SI units encoded in every key name:
//
//   {
//     "tether": {"rho_ohm_per_m": 0.0166, "lambda_kg_per_m": 0.095},
//     "quadcopter": {"mass_kg": 0.7, "c_p_w_per_n15": 4.5, "overhead_w": 0},
//     "source": {"voltage_v": 18.0},
//     "gravity_m_per_s2": 9.81,
//     "segment_lengths_m": [6.1, 1.5],
//     "setpoint_m": [30.0, 15.0]
//   }
//
// overhead_w, gravity_m_per_s2, segment_lengths_m and setpoint_m are
// optional. Unknown keys are rejected.

#ifndef TETHERPOWER_CONFIG_HPP_
#define TETHERPOWER_CONFIG_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tetherpower/circuit.hpp"
#include "tetherpower/geometry.hpp"
#include "tetherpower/powertrain.hpp"

namespace tetherpower {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  TetherSpec tether;
  QuadcopterSpec quad;
  double source_voltage = 0.0;
  double gravity = kStandardGravity;
  std::optional<std::vector<double>> segment_lengths;
  std::optional<PlanarPoint> setpoint;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Reach-study configuration: 12 AWG tether, 0.7 kg quadcopter with
// c_p = 4.5 W/N^1.5, at the given source voltage.
RunConfig reach_study_config(double source_voltage);

}  // namespace tetherpower

#endif  // TETHERPOWER_CONFIG_HPP_
