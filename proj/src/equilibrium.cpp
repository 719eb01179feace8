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

#include "tetherpower/equilibrium.hpp"

#include <cmath>
#include <string>

#include "tetherpower/errors.hpp"

namespace tetherpower {

namespace {

bool coincident(PlanarPoint p, PlanarPoint q) {
  return p.y == q.y && p.z == q.z;
}

TetherSpan solve_span(PlanarPoint from, PlanarPoint to, double length,
                      const TetherSpec& tether, double g, int index) {
  TetherSpan span;
  span.length = length;
  span.resistance = tether.rho * length;
  if (length == 0.0 && coincident(from, to)) return span;
  try {
    span.catenary = fit_catenary(from, to, length);
  } catch (const TautTether& e) {
    throw TautTether("segment " + std::to_string(index) + ": " + e.what(),
                     index);
  } catch (const VerticalSpan& e) {
    throw VerticalSpan("segment " + std::to_string(index) + ": " + e.what(),
                       index);
  } catch (const NoConvergence& e) {
    throw NoConvergence("segment " + std::to_string(index) + ": " + e.what(),
                        index);
  }
  span.forces = end_forces(*span.catenary, tether.lambda, g);
  return span;
}

}  // namespace

double ChainConfiguration::total_length() const {
  double total = 0.0;
  for (double l : segment_lengths) total += l;
  return total;
}

void validate(const ChainConfiguration& cfg) {
  const std::size_t n = cfg.positions.size();
  if (n == 0) throw InvalidProblem("chain needs at least one quadcopter");
  if (cfg.segment_lengths.size() != n || cfg.quads.size() != n) {
    throw InvalidProblem("chain lists must all have one entry per quadcopter");
  }
  if (!cfg.segment_tethers.empty() && cfg.segment_tethers.size() != n) {
    throw InvalidProblem("per-segment tether list has the wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    validate(cfg.segment_tether(i));
    validate(cfg.quads[i]);
    if (!(cfg.segment_lengths[i] >= 0.0) ||
        !std::isfinite(cfg.segment_lengths[i])) {
      throw InvalidProblem("segment lengths must be finite and nonnegative");
    }
  }
}

ChainThrusts chain_thrusts(const ChainConfiguration& cfg, double g) {
  validate(cfg);
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw InvalidProblem("gravity must be positive");
  }
  const std::size_t n = cfg.size();
  ChainThrusts out;
  out.spans.reserve(n);
  PlanarPoint prev = cfg.anchor;
  for (std::size_t i = 0; i < n; ++i) {
    out.spans.push_back(solve_span(prev, cfg.positions[i],
                                   cfg.segment_lengths[i],
                                   cfg.segment_tether(i), g,
                                   static_cast<int>(i + 1)));
    prev = cfg.positions[i];
  }
  out.anchor_force = out.spans.front().forces.on_p0;

  out.thrusts.resize(n);
  out.thrust_vectors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ForceVec tether_pull = out.spans[i].forces.on_p1;
    if (i + 1 < n) tether_pull = tether_pull + out.spans[i + 1].forces.on_p0;
    const ForceVec thrust =
        ForceVec{0.0, cfg.quads[i].mass * g} - tether_pull;
    out.thrust_vectors[i] = thrust;
    out.thrusts[i] = norm(thrust);
  }
  return out;
}

HoverSolution chain_power(const ChainConfiguration& cfg, double source_voltage,
                          double g) {
  ChainThrusts mech = chain_thrusts(cfg, g);
  const std::size_t n = cfg.size();

  CircuitProblem prob;
  prob.source_voltage = source_voltage;
  prob.resistances.resize(n);
  prob.powers.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    prob.resistances[i] = mech.spans[i].resistance;
    prob.powers[i] = thrust_to_power(mech.thrusts[i], cfg.quads[i]);
  }

  HoverSolution sol;
  sol.circuit = solve_circuit(prob);
  sol.total_power = sol.circuit.source_power;
  sol.quad_powers = std::move(prob.powers);
  sol.segments = std::move(mech.spans);
  sol.thrusts = std::move(mech.thrusts);
  sol.thrust_vectors = std::move(mech.thrust_vectors);
  sol.anchor_force = mech.anchor_force;
  return sol;
}

}  // namespace tetherpower
