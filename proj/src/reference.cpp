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

#include "tetherpower/reference.hpp"

#include <cmath>

#include "tetherpower/circuit.hpp"
#include "tetherpower/errors.hpp"

namespace tetherpower::reference {

std::vector<std::vector<double>> trace_feasible_boundary(
    double source_voltage, double c_p, std::span<const double> resistances,
    int n_rays) {
  std::vector<std::vector<double>> points;
  for (const auto& dir : boundary_ray_directions(
           static_cast<int>(resistances.size()), n_rays)) {
    points.push_back(
        boundary_along_ray(source_voltage, c_p, resistances, dir));
  }
  return points;
}

std::vector<HeatmapCell> sweep_thrust_heatmap(
    double source_voltage, double c_p, std::span<const double> resistances,
    std::span<const double> f_max, int resolution) {
  if (resistances.size() != 2 || f_max.size() != 2 || resolution < 2) {
    throw InvalidProblem("reference heatmap covers two quadcopters only");
  }
  std::vector<HeatmapCell> cells;
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const double f[2] = {f_max[0] * i / (resolution - 1),
                           f_max[1] * j / (resolution - 1)};
      cells.push_back(
          {f[0], f[1], heatmap_cell_power(source_voltage, c_p, resistances, f)});
    }
  }
  return cells;
}

std::vector<CurveSample> sweep_length_curve(const ReachProblem& prob,
                                            const SearchOptions& opts) {
  std::vector<CurveSample> curve;
  for (double l : length_grid(prob, opts)) {
    curve.push_back({l, try_one_quad_power(prob, l)});
  }
  return curve;
}

std::vector<GridSample> sweep_intermediate_grid(const ReachProblem& prob,
                                                double total_length,
                                                const SearchOptions& opts) {
  // Straight evaluation in the caller's frame, without the mirroring done
  // by the parallel kernel.
  const auto fractions = fraction_grid(opts);
  std::vector<GridSample> grid;
  for (const auto& p : intermediate_grid(prob, opts)) {
    grid.push_back(intermediate_cell(prob, total_length, p, fractions));
  }
  return grid;
}

}  // namespace tetherpower::reference
