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

// Horizontal-reach planning: choose the tether length for one quadcopter,
// then place an intermediate quadcopter on the same tether and compare.
//
// Searches are grid-then-refine. Infeasible or geometrically impossible
// samples count as +infinity during search and are emitted without a
// power value. All sweeps run on OpenMP workers and are assembled in a
// fixed order, so results do not depend on the worker count.

#ifndef TETHERPOWER_PLANNER_HPP_
#define TETHERPOWER_PLANNER_HPP_

#include <optional>
#include <span>
#include <vector>

#include "tetherpower/circuit.hpp"
#include "tetherpower/geometry.hpp"
#include "tetherpower/powertrain.hpp"

namespace tetherpower {

// End-effector target relative to an anchor at the origin.
struct ReachProblem {
  PlanarPoint end_setpoint;
  double source_voltage = 0.0;
  TetherSpec tether;
  QuadcopterSpec quad;
  double gravity = kStandardGravity;
};

// Requires a nonzero horizontal setpoint (either side of the anchor) and a
// positive voltage. Problems with a negative horizontal setpoint are solved
// in the mirrored frame and mirrored back.
void validate(const ReachProblem& prob);

struct SearchOptions {
  int workers = 1;
  // One quadcopter: coarse grid over [lower, upper] * chord, then golden
  // section to length_tolerance.
  double length_step = 0.05;
  double length_lower_factor = 1.001;
  double length_upper_factor = 3.0;
  double length_tolerance = 1e-3;
  // Two quadcopters: the intermediate grid step is |end.y| / grid_divisions.
  int grid_divisions = 60;
  double fraction_step = 0.05;
  int descent_cycles = 3;
  double min_position_step = 1e-2;
  double min_fraction_step = 1e-3;
};

struct CurveSample {
  double length = 0.0;
  std::optional<double> power;
};

struct OneQuadResult {
  double optimal_length = 0.0;
  double min_power = 0.0;
  std::vector<CurveSample> power_curve;
};

struct GridSample {
  double y = 0.0;
  double z = 0.0;
  std::optional<double> power;  // best over the fraction grid
  double best_fraction = 0.0;   // meaningful only when power is set
};

struct TwoQuadResult {
  double total_length = 0.0;
  double optimal_fraction = 0.0;
  PlanarPoint optimal_intermediate;
  double min_power = 0.0;
  std::vector<GridSample> power_grid;  // y-major, then z
};

struct ComparisonReport {
  OneQuadResult one;
  TwoQuadResult two;
  double saving = 0.0;  // 1 - P_two / P_one
};

// Supply power for one quadcopter at the setpoint on a tether of `length`.
// Throws TautTether or Infeasible.
double one_quad_power(const ReachProblem& prob, double length);

// Supply power with an intermediate quadcopter taking fraction * total of
// the tether. Throws TautTether (with segment index) or Infeasible.
double two_quad_power(const ReachProblem& prob, double total_length,
                      PlanarPoint intermediate, double fraction);

// Non-throwing variants for search loops: nullopt when the sample is
// taut, vertical, or electrically infeasible.
std::optional<double> try_one_quad_power(const ReachProblem& prob,
                                         double length);
std::optional<double> try_two_quad_power(const ReachProblem& prob,
                                         double total_length,
                                         PlanarPoint intermediate,
                                         double fraction);

// Tether lengths of the coarse one-quadcopter grid.
std::vector<double> length_grid(const ReachProblem& prob,
                                const SearchOptions& opts = {});

// Power at every length of length_grid.
std::vector<CurveSample> sweep_length_curve(const ReachProblem& prob,
                                            const SearchOptions& opts = {});

OneQuadResult optimize_one_quad(const ReachProblem& prob,
                                const SearchOptions& opts = {});

// Intermediate positions (y-major) and fraction values of the two-quad grid.
std::vector<PlanarPoint> intermediate_grid(const ReachProblem& prob,
                                           const SearchOptions& opts = {});
std::vector<double> fraction_grid(const SearchOptions& opts = {});

// Best fraction for one intermediate position; ties go to the smaller
// fraction.
GridSample intermediate_cell(const ReachProblem& prob, double total_length,
                             PlanarPoint intermediate,
                             std::span<const double> fractions);

std::vector<GridSample> sweep_intermediate_grid(const ReachProblem& prob,
                                                double total_length,
                                                const SearchOptions& opts = {});

TwoQuadResult optimize_two_quad(const ReachProblem& prob, double total_length,
                                const SearchOptions& opts = {});

ComparisonReport compare_one_vs_two(const ReachProblem& prob,
                                    const SearchOptions& opts = {});

struct HeatmapCell {
  double f1 = 0.0;
  double f2 = 0.0;
  std::optional<double> source_power;
};

// Source power over a (f_1, f_2) thrust grid with `resolution` points per
// axis from 0 to f_max[k]; f_1-major order. Quadcopters beyond the second
// are held at `other_thrusts` (zero when empty).
std::vector<HeatmapCell> sweep_thrust_heatmap(
    double source_voltage, double c_p, std::span<const double> resistances,
    std::span<const double> f_max, int resolution, int workers = 1,
    std::span<const double> other_thrusts = {});

// Source power of one heatmap cell, nullopt if infeasible.
std::optional<double> heatmap_cell_power(double source_voltage, double c_p,
                                         std::span<const double> resistances,
                                         std::span<const double> thrusts);

}  // namespace tetherpower

#endif  // TETHERPOWER_PLANNER_HPP_
