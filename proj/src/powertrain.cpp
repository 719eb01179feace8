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

#include "tetherpower/powertrain.hpp"

#include <cmath>
#include <string>

#include "tetherpower/errors.hpp"

namespace tetherpower {

void validate(const QuadcopterSpec& spec) {
  if (!std::isfinite(spec.mass) || spec.mass < 0.0) {
    throw InvalidProblem("quadcopter mass must be finite and nonnegative");
  }
  if (!std::isfinite(spec.c_p) || !(spec.c_p > 0.0)) {
    throw InvalidProblem("power constant c_p must be positive");
  }
  if (!std::isfinite(spec.overhead) || spec.overhead < 0.0) {
    throw InvalidProblem("overhead power must be nonnegative");
  }
}

void validate(const PropellerParams& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(p.area) || !positive(p.air_density)) {
    throw InvalidProblem("propeller area and air density must be positive");
  }
  if (!positive(p.prop_efficiency) || p.prop_efficiency > 1.0 ||
      !positive(p.powertrain_efficiency) || p.powertrain_efficiency > 1.0) {
    throw InvalidProblem("efficiencies must lie in (0, 1]");
  }
  if (p.count < 1) {
    throw InvalidProblem("propeller count must be at least 1");
  }
}

double power_constant(const PropellerParams& p) {
  validate(p);
  return 1.0 / (p.prop_efficiency * p.powertrain_efficiency *
                std::sqrt(2.0 * p.air_density * p.count * p.area));
}

double thrust_to_power(double thrust, const QuadcopterSpec& spec) {
  if (!(thrust >= 0.0)) {
    throw NegativeThrust("thrust " + std::to_string(thrust) + " N is negative");
  }
  // f * sqrt(f) keeps P(4f) = 8 P(f) exact in binary floating point.
  return spec.c_p * (thrust * std::sqrt(thrust)) + spec.overhead;
}

double power_to_thrust(double power, const QuadcopterSpec& spec) {
  if (!(power >= spec.overhead)) {
    throw InsufficientPower("power " + std::to_string(power) +
                            " W is below the overhead " +
                            std::to_string(spec.overhead) + " W");
  }
  return std::cbrt(std::pow((power - spec.overhead) / spec.c_p, 2.0));
}

}  // namespace tetherpower
