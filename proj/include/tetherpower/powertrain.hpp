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

// Actuator-disk power train: electrical power drawn by a hovering
// quadcopter as a function of its total thrust, P = c_p f^(3/2).

#ifndef TETHERPOWER_POWERTRAIN_HPP_
#define TETHERPOWER_POWERTRAIN_HPP_

namespace tetherpower {

struct QuadcopterSpec {
  double mass = 0.0;      // kg
  double c_p = 0.0;       // W / N^1.5
  double overhead = 0.0;  // W, constant avionics draw
};

// Throws InvalidProblem unless mass >= 0, c_p > 0, overhead >= 0 (all
// finite). Zero mass is accepted for degenerate chains; configuration
// loading demands a positive mass.
void validate(const QuadcopterSpec& spec);

struct PropellerParams {
  double area = 0.0;         // single-propeller disk area, m^2
  double air_density = 0.0;  // kg / m^3
  double prop_efficiency = 1.0;
  double powertrain_efficiency = 1.0;
  int count = 1;
};

void validate(const PropellerParams& params);

// c_p = 1 / (eta_prop eta_pt sqrt(2 rho_air n A_prop)).
double power_constant(const PropellerParams& params);

// Throws NegativeThrust for f < 0.
double thrust_to_power(double thrust, const QuadcopterSpec& spec);

// Inverse of thrust_to_power. Throws InsufficientPower if power < overhead.
double power_to_thrust(double power, const QuadcopterSpec& spec);

}  // namespace tetherpower

#endif  // TETHERPOWER_POWERTRAIN_HPP_
