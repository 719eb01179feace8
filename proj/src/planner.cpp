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

#include "tetherpower/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tetherpower/equilibrium.hpp"
#include "tetherpower/errors.hpp"
#include "tetherpower/parallel.hpp"
#include "tetherpower/search.hpp"

namespace tetherpower {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kChordSlack = 1e-12;

ChainConfiguration one_quad_chain(const ReachProblem& prob, double length) {
  ChainConfiguration cfg;
  cfg.positions = {prob.end_setpoint};
  cfg.segment_lengths = {length};
  cfg.tether = prob.tether;
  cfg.quads = {prob.quad};
  return cfg;
}

ChainConfiguration two_quad_chain(const ReachProblem& prob,
                                  double total_length, PlanarPoint mid,
                                  double fraction) {
  ChainConfiguration cfg;
  cfg.positions = {mid, prob.end_setpoint};
  cfg.segment_lengths = {fraction * total_length,
                         (1.0 - fraction) * total_length};
  cfg.tether = prob.tether;
  cfg.quads = {prob.quad, prob.quad};
  return cfg;
}

bool spans_admissible(PlanarPoint from, PlanarPoint to, double length) {
  return std::abs(to.y - from.y) > kMinHorizontalSpan &&
         length > distance(from, to) * (1.0 + kChordSlack);
}

// Returns the problem with a nonnegative horizontal setpoint and whether it
// was mirrored.
std::pair<ReachProblem, bool> canonical(const ReachProblem& prob) {
  validate(prob);
  if (prob.end_setpoint.y > 0.0) return {prob, false};
  ReachProblem mirrored = prob;
  mirrored.end_setpoint.y = -prob.end_setpoint.y;
  return {mirrored, true};
}

double vertical_low(const ReachProblem& prob) {
  return std::min(0.0, prob.end_setpoint.z);
}
double vertical_high(const ReachProblem& prob) {
  return std::max(0.0, prob.end_setpoint.z);
}

double objective_or_inf(const std::optional<double>& v) {
  return v ? *v : kInf;
}

// Two-quadcopter refinement state.
struct Candidate {
  double y;
  double z;
  double fraction;
  double value;
};

// Lexicographic preference for equal values: smaller y, z, fraction.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.y != b.y) return a.y < b.y;
  if (a.z != b.z) return a.z < b.z;
  return a.fraction < b.fraction;
}

Candidate coordinate_descent(const ReachProblem& prob, double total_length,
                             Candidate start, const SearchOptions& opts) {
  const double y_hi = prob.end_setpoint.y;
  const double z_lo = vertical_low(prob);
  const double z_hi = vertical_high(prob);
  auto evaluate_at = [&](double y, double z, double fraction) {
    if (y < 0.0 || y > y_hi || z < z_lo || z > z_hi || !(fraction > 0.0) ||
        !(fraction < 1.0)) {
      return kInf;
    }
    return objective_or_inf(
        try_two_quad_power(prob, total_length, {y, z}, fraction));
  };

  Candidate best = start;
  double position_step = y_hi / opts.grid_divisions;
  double fraction_step = opts.fraction_step;
  for (;;) {
    for (int cycle = 0; cycle < opts.descent_cycles; ++cycle) {
      bool improved = false;
      for (int axis = 0; axis < 3; ++axis) {
        Candidate lower = best;
        Candidate upper = best;
        switch (axis) {
          case 0:
            lower.y -= position_step;
            upper.y += position_step;
            break;
          case 1:
            lower.z -= position_step;
            upper.z += position_step;
            break;
          default:
            lower.fraction -= fraction_step;
            upper.fraction += fraction_step;
            break;
        }
        lower.value = evaluate_at(lower.y, lower.z, lower.fraction);
        upper.value = evaluate_at(upper.y, upper.z, upper.fraction);
        const Candidate& pick = better(lower, upper) ? lower : upper;
        if (pick.value < best.value) {
          best = pick;
          improved = true;
        }
      }
      if (!improved) break;
    }
    const bool position_done = position_step <= opts.min_position_step;
    const bool fraction_done = fraction_step <= opts.min_fraction_step;
    if (position_done && fraction_done) break;
    if (!position_done) position_step *= 0.5;
    if (!fraction_done) fraction_step *= 0.5;
  }
  return best;
}

TwoQuadResult mirror(TwoQuadResult r) {
  r.optimal_intermediate.y = -r.optimal_intermediate.y;
  for (auto& s : r.power_grid) s.y = -s.y;
  return r;
}

}  // namespace

void validate(const ReachProblem& prob) {
  if (!std::isfinite(prob.end_setpoint.y) ||
      !std::isfinite(prob.end_setpoint.z) || prob.end_setpoint.y == 0.0) {
    throw InvalidProblem("setpoint needs a finite, nonzero horizontal offset");
  }
  if (!(prob.source_voltage > 0.0) || !std::isfinite(prob.source_voltage)) {
    throw InvalidProblem("source voltage must be positive");
  }
  if (!(prob.gravity > 0.0) || !std::isfinite(prob.gravity)) {
    throw InvalidProblem("gravity must be positive");
  }
  validate(prob.tether);
  validate(prob.quad);
}

double one_quad_power(const ReachProblem& prob, double length) {
  validate(prob);
  return chain_power(one_quad_chain(prob, length), prob.source_voltage,
                     prob.gravity)
      .total_power;
}

std::optional<double> try_one_quad_power(const ReachProblem& prob,
                                         double length) {
  if (!spans_admissible({0.0, 0.0}, prob.end_setpoint, length)) {
    return std::nullopt;
  }
  try {
    return one_quad_power(prob, length);
  } catch (const SegmentError&) {
    return std::nullopt;
  } catch (const Infeasible&) {
    return std::nullopt;
  }
}

double two_quad_power(const ReachProblem& prob, double total_length,
                      PlanarPoint intermediate, double fraction) {
  validate(prob);
  if (!(fraction > 0.0) || !(fraction < 1.0)) {
    throw InvalidProblem("tether fraction must lie strictly inside (0, 1)");
  }
  if (!(total_length > 0.0)) {
    throw InvalidProblem("total tether length must be positive");
  }
  return chain_power(two_quad_chain(prob, total_length, intermediate, fraction),
                     prob.source_voltage, prob.gravity)
      .total_power;
}

std::optional<double> try_two_quad_power(const ReachProblem& prob,
                                         double total_length,
                                         PlanarPoint intermediate,
                                         double fraction) {
  if (!spans_admissible({0.0, 0.0}, intermediate, fraction * total_length) ||
      !spans_admissible(intermediate, prob.end_setpoint,
                        (1.0 - fraction) * total_length)) {
    return std::nullopt;
  }
  try {
    return two_quad_power(prob, total_length, intermediate, fraction);
  } catch (const SegmentError&) {
    return std::nullopt;
  } catch (const Infeasible&) {
    return std::nullopt;
  }
}

std::vector<double> length_grid(const ReachProblem& prob,
                                const SearchOptions& opts) {
  validate(prob);
  if (!(opts.length_step > 0.0) || !(opts.length_lower_factor > 1.0) ||
      !(opts.length_upper_factor > opts.length_lower_factor)) {
    throw InvalidProblem("invalid tether length grid options");
  }
  const double chord = distance({0.0, 0.0}, prob.end_setpoint);
  const double lo = chord * opts.length_lower_factor;
  const double hi = chord * opts.length_upper_factor;
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / opts.length_step + 1e-9)) + 1;
  std::vector<double> lengths(count);
  for (std::size_t k = 0; k < count; ++k) {
    lengths[k] = lo + static_cast<double>(k) * opts.length_step;
  }
  return lengths;
}

std::vector<CurveSample> sweep_length_curve(const ReachProblem& prob,
                                            const SearchOptions& opts) {
  const auto lengths = length_grid(prob, opts);
  std::vector<CurveSample> curve(lengths.size());
  parallel_for(lengths.size(), opts.workers, [&](std::size_t k) {
    curve[k] = {lengths[k], try_one_quad_power(prob, lengths[k])};
  });
  return curve;
}

OneQuadResult optimize_one_quad(const ReachProblem& prob,
                                const SearchOptions& opts) {
  OneQuadResult result;
  result.power_curve = sweep_length_curve(prob, opts);
  const auto& curve = result.power_curve;

  std::size_t best = curve.size();
  for (std::size_t k = 0; k < curve.size(); ++k) {
    if (curve[k].power &&
        (best == curve.size() || *curve[k].power < *curve[best].power)) {
      best = k;
    }
  }
  if (best == curve.size()) {
    throw AllInfeasible("no tether length admits a circuit solution");
  }

  const double lo = curve[best == 0 ? 0 : best - 1].length;
  const double hi = curve[std::min(best + 1, curve.size() - 1)].length;
  const auto refined = golden_section_minimize(
      [&](double l) { return objective_or_inf(try_one_quad_power(prob, l)); },
      lo, hi, opts.length_tolerance);

  if (refined.value < *curve[best].power) {
    result.optimal_length = refined.x;
    result.min_power = refined.value;
  } else {
    result.optimal_length = curve[best].length;
    result.min_power = *curve[best].power;
  }
  return result;
}

std::vector<PlanarPoint> intermediate_grid(const ReachProblem& prob,
                                           const SearchOptions& opts) {
  validate(prob);
  if (opts.grid_divisions < 1) {
    throw InvalidProblem("grid_divisions must be positive");
  }
  const double sign = prob.end_setpoint.y > 0.0 ? 1.0 : -1.0;
  const double step = std::abs(prob.end_setpoint.y) / opts.grid_divisions;
  const double z_lo = vertical_low(prob);
  const double z_hi = vertical_high(prob);
  const int nz = static_cast<int>(std::floor((z_hi - z_lo) / step + 1e-9));
  std::vector<PlanarPoint> points;
  points.reserve(static_cast<std::size_t>(opts.grid_divisions + 1) * (nz + 1));
  for (int i = 0; i <= opts.grid_divisions; ++i) {
    for (int j = 0; j <= nz; ++j) {
      points.push_back({sign * (i * step), z_lo + j * step});
    }
  }
  return points;
}

std::vector<double> fraction_grid(const SearchOptions& opts) {
  if (!(opts.fraction_step > 0.0) || !(opts.fraction_step < 1.0)) {
    throw InvalidProblem("fraction_step must lie in (0, 1)");
  }
  std::vector<double> fractions;
  for (int k = 1; k * opts.fraction_step < 1.0 - 1e-9; ++k) {
    fractions.push_back(k * opts.fraction_step);
  }
  return fractions;
}

GridSample intermediate_cell(const ReachProblem& prob, double total_length,
                             PlanarPoint intermediate,
                             std::span<const double> fractions) {
  GridSample cell{intermediate.y, intermediate.z, std::nullopt, 0.0};
  for (double f : fractions) {
    const auto p = try_two_quad_power(prob, total_length, intermediate, f);
    if (p && (!cell.power || *p < *cell.power)) {
      cell.power = p;
      cell.best_fraction = f;
    }
  }
  return cell;
}

std::vector<GridSample> sweep_intermediate_grid(const ReachProblem& prob,
                                                double total_length,
                                                const SearchOptions& opts) {
  const auto [canon, mirrored] = canonical(prob);
  const auto points = intermediate_grid(canon, opts);
  const auto fractions = fraction_grid(opts);
  std::vector<GridSample> grid(points.size());
  parallel_for(points.size(), opts.workers, [&](std::size_t k) {
    grid[k] = intermediate_cell(canon, total_length, points[k], fractions);
  });
  if (mirrored) {
    for (auto& s : grid) s.y = -s.y;
  }
  return grid;
}

TwoQuadResult optimize_two_quad(const ReachProblem& prob, double total_length,
                                const SearchOptions& opts) {
  const auto [canon, mirrored] = canonical(prob);
  if (!(total_length > 0.0) || !std::isfinite(total_length)) {
    throw InvalidProblem("total tether length must be positive");
  }
  TwoQuadResult result;
  result.total_length = total_length;
  result.power_grid = sweep_intermediate_grid(canon, total_length, opts);

  // y-major, z-ascending order makes the first strict minimum the one with
  // the smallest y, then z; cells already prefer the smallest fraction.
  const GridSample* best = nullptr;
  for (const auto& s : result.power_grid) {
    if (s.power && (!best || *s.power < *best->power)) best = &s;
  }
  if (!best) {
    throw AllInfeasible("no intermediate placement admits a circuit solution");
  }

  const Candidate start{best->y, best->z, best->best_fraction, *best->power};
  const Candidate refined =
      coordinate_descent(canon, total_length, start, opts);
  result.optimal_intermediate = {refined.y, refined.z};
  result.optimal_fraction = refined.fraction;
  result.min_power = refined.value;
  return mirrored ? mirror(std::move(result)) : result;
}

ComparisonReport compare_one_vs_two(const ReachProblem& prob,
                                    const SearchOptions& opts) {
  ComparisonReport report;
  report.one = optimize_one_quad(prob, opts);
  report.two = optimize_two_quad(prob, report.one.optimal_length, opts);
  report.saving = 1.0 - report.two.min_power / report.one.min_power;
  return report;
}

std::optional<double> heatmap_cell_power(double source_voltage, double c_p,
                                         std::span<const double> resistances,
                                         std::span<const double> thrusts) {
  CircuitProblem prob;
  prob.source_voltage = source_voltage;
  prob.resistances.assign(resistances.begin(), resistances.end());
  prob.powers.resize(thrusts.size());
  for (std::size_t j = 0; j < thrusts.size(); ++j) {
    prob.powers[j] = c_p * thrusts[j] * std::sqrt(thrusts[j]);
  }
  auto sol = try_solve_circuit(prob);
  if (!sol) return std::nullopt;
  return sol->source_power;
}

std::vector<HeatmapCell> sweep_thrust_heatmap(
    double source_voltage, double c_p, std::span<const double> resistances,
    std::span<const double> f_max, int resolution, int workers,
    std::span<const double> other_thrusts) {
  const std::size_t n = resistances.size();
  if (n < 2) throw InvalidProblem("heatmap needs at least two quadcopters");
  if (f_max.size() != 2 && f_max.size() != n) {
    throw InvalidProblem("f_max needs one entry per quadcopter");
  }
  if (!(f_max[0] > 0.0) || !(f_max[1] > 0.0) || !std::isfinite(f_max[0]) ||
      !std::isfinite(f_max[1])) {
    throw InvalidProblem("f_max entries must be positive");
  }
  if (resolution < 2) throw InvalidProblem("resolution must be at least 2");
  if (!other_thrusts.empty() && other_thrusts.size() != n - 2) {
    throw InvalidProblem("other_thrusts needs one entry per extra quadcopter");
  }
  if (!(c_p > 0.0)) throw InvalidProblem("power constant must be positive");
  // Surface malformed circuits before the loop.
  validate(CircuitProblem{source_voltage,
                          std::vector<double>(resistances.begin(),
                                              resistances.end()),
                          std::vector<double>(n, 0.0)});
  for (double f : other_thrusts) {
    if (!(f >= 0.0)) throw InvalidProblem("other_thrusts must be >= 0");
  }

  const auto res = static_cast<std::size_t>(resolution);
  std::vector<HeatmapCell> cells(res * res);
  parallel_for(cells.size(), workers, [&](std::size_t k) {
    const std::size_t i = k / res;
    const std::size_t j = k % res;
    std::vector<double> thrusts(n, 0.0);
    thrusts[0] = f_max[0] * static_cast<double>(i) / (resolution - 1);
    thrusts[1] = f_max[1] * static_cast<double>(j) / (resolution - 1);
    for (std::size_t q = 0; q < other_thrusts.size(); ++q) {
      thrusts[q + 2] = other_thrusts[q];
    }
    cells[k] = {thrusts[0], thrusts[1],
                heatmap_cell_power(source_voltage, c_p, resistances, thrusts)};
  });
  return cells;
}

}  // namespace tetherpower
