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

// Quasi-static hover of a chain of quadcopters joined by catenary tether
// segments, and the supply power that chain requires.

#ifndef TETHERPOWER_EQUILIBRIUM_HPP_
#define TETHERPOWER_EQUILIBRIUM_HPP_

#include <optional>
#include <vector>

#include "tetherpower/circuit.hpp"
#include "tetherpower/geometry.hpp"
#include "tetherpower/powertrain.hpp"

namespace tetherpower {

// Quadcopters are indexed 1..N outward from the anchor; segment i joins
// position i-1 (the anchor for i = 1) and position i.
struct ChainConfiguration {
  PlanarPoint anchor;
  std::vector<PlanarPoint> positions;
  std::vector<double> segment_lengths;
  TetherSpec tether;
  // Optional per-segment tether; when empty every segment uses `tether`.
  std::vector<TetherSpec> segment_tethers;
  std::vector<QuadcopterSpec> quads;

  std::size_t size() const { return positions.size(); }
  const TetherSpec& segment_tether(std::size_t i) const {
    return segment_tethers.empty() ? tether : segment_tethers[i];
  }
  double total_length() const;
};

void validate(const ChainConfiguration& cfg);

// One solved span. A zero-length segment between coincident points is
// collapsed: it has no catenary and exerts no force.
struct TetherSpan {
  std::optional<CatenarySegment> catenary;
  SupportForces forces;
  double length = 0.0;
  double resistance = 0.0;
};

struct ChainThrusts {
  std::vector<TetherSpan> spans;
  std::vector<double> thrusts;            // f_1..f_N, N
  std::vector<ForceVec> thrust_vectors;   // thrust each quadcopter produces
  ForceVec anchor_force;                  // tether force on the anchor
};

struct HoverSolution {
  std::vector<TetherSpan> segments;
  std::vector<double> thrusts;
  std::vector<ForceVec> thrust_vectors;
  ForceVec anchor_force;
  std::vector<double> quad_powers;
  CircuitSolution circuit;
  double total_power = 0.0;
};

// Hover thrust f_i = |(0, m_i g) - t_i - t_{i+1}| where t_i is the force of
// segment i on quadcopter i and t_{N+1} = 0.
//
// Geometry errors (TautTether, VerticalSpan, NoConvergence) carry the
// 1-based index of the offending segment.
ChainThrusts chain_thrusts(const ChainConfiguration& cfg,
                           double g = kStandardGravity);

// Thrusts -> per-quadcopter power -> network solve with R_j = rho_j l_j.
// Throws Infeasible when the network cannot deliver the power.
HoverSolution chain_power(const ChainConfiguration& cfg, double source_voltage,
                          double g = kStandardGravity);

}  // namespace tetherpower

#endif  // TETHERPOWER_EQUILIBRIUM_HPP_
