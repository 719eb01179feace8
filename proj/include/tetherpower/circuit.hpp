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

// DC network of N quadcopters wired in parallel along one tether.
//
// Segment j of the tether (resistance R_j) carries the current of every
// quadcopter at or beyond j, so the voltage at quadcopter j is
//
//   V_j = V_s - sum_{k<=j} R_k * sum_{l>=k} i_l
//
// and each quadcopter draws i_j = P_j / V_j. Multiplying through gives N
// coupled quadratics in the currents, solved here by damped Newton.

#ifndef TETHERPOWER_CIRCUIT_HPP_
#define TETHERPOWER_CIRCUIT_HPP_

#include <optional>
#include <span>
#include <vector>

namespace tetherpower {

struct TetherSpec {
  double rho = 0.0;     // ohm / m
  double lambda = 0.0;  // kg / m
};

void validate(const TetherSpec& tether);

struct CircuitProblem {
  double source_voltage = 0.0;
  std::vector<double> resistances;  // R_1..R_N, ohm
  std::vector<double> powers;       // P_1..P_N, W
};

struct CircuitSolution {
  std::vector<double> currents;  // i_1..i_N, A
  std::vector<double> voltages;  // V_1..V_N, V
  double source_current = 0.0;
  double source_power = 0.0;
};

// Throws InvalidProblem for malformed inputs.
void validate(const CircuitProblem& prob);

// Returns the low-current (physical) solution, or nullopt when Newton with
// resistance continuation cannot reach the residual tolerance, which means
// the demanded powers are not deliverable. Throws InvalidProblem only.
std::optional<CircuitSolution> try_solve_circuit(const CircuitProblem& prob);

// As try_solve_circuit, throwing Infeasible instead of returning nullopt.
CircuitSolution solve_circuit(const CircuitProblem& prob);

// Residuals P_j - V_s i_j + i_j * drop_j(i) of the coupled quadratics.
std::vector<double> circuit_residuals(const CircuitProblem& prob,
                                      std::span<const double> currents);

// Source power for a single quadcopter on resistance r1:
//   P_s = V_s^2 / (2 R) * (1 - sqrt(1 - 4 c_p f^1.5 R / V_s^2)).
// Throws Infeasible when the discriminant is negative.
double closed_form_single(double thrust, double r1, double source_voltage,
                          double c_p);

// Thrust above which a single quadcopter on resistance r cannot be supplied.
double critical_thrust(double source_voltage, double c_p, double r);

// Supremum feasible thrust vectors along rays from the origin.
//
// Ray directions are the points of the simplex lattice with n_rays - 1
// subdivisions per edge, normalised to unit length, in lexicographic order
// of the lattice weights. For N = 2 this gives n_rays rays from the f_1
// axis to the f_2 axis; for N = 1 there is a single ray. Each point is the
// last feasible thrust found by bisection to min(1e-6 N, 1e-9 relative).
// Rays with no finite edge (zero resistance in every loaded segment) return
// +infinity components.
//
// Rays are evaluated on `workers` OpenMP threads (0 = runtime default); the
// output does not depend on the worker count.
std::vector<std::vector<double>> trace_feasible_boundary(
    double source_voltage, double c_p, std::span<const double> resistances,
    int n_rays, int workers = 1);

// Unit directions used by trace_feasible_boundary.
std::vector<std::vector<double>> boundary_ray_directions(int n_quads,
                                                         int n_rays);

// Boundary point along one unit direction.
std::vector<double> boundary_along_ray(double source_voltage, double c_p,
                                       std::span<const double> resistances,
                                       std::span<const double> direction);

// True if the thrust vector can be produced, each quadcopter drawing
// c_p f^1.5.
bool thrusts_feasible(double source_voltage, double c_p,
                      std::span<const double> resistances,
                      std::span<const double> thrusts);

}  // namespace tetherpower

#endif  // TETHERPOWER_CIRCUIT_HPP_
