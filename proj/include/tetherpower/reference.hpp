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

// Single-threaded reference versions of the parallel sweep kernels. They
// share the per-item routines with the OpenMP kernels but loop serially in
// output order; tests compare the two bit for bit and the benchmark target
// times them against each other.

#ifndef TETHERPOWER_REFERENCE_HPP_
#define TETHERPOWER_REFERENCE_HPP_

#include <span>
#include <vector>

#include "tetherpower/planner.hpp"

namespace tetherpower::reference {

std::vector<std::vector<double>> trace_feasible_boundary(
    double source_voltage, double c_p, std::span<const double> resistances,
    int n_rays);

std::vector<HeatmapCell> sweep_thrust_heatmap(
    double source_voltage, double c_p, std::span<const double> resistances,
    std::span<const double> f_max, int resolution);

std::vector<CurveSample> sweep_length_curve(const ReachProblem& prob,
                                            const SearchOptions& opts = {});

std::vector<GridSample> sweep_intermediate_grid(const ReachProblem& prob,
                                                double total_length,
                                                const SearchOptions& opts = {});

}  // namespace tetherpower::reference

#endif  // TETHERPOWER_REFERENCE_HPP_
